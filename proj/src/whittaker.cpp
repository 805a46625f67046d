#include "vermalab/whittaker.hpp"

#include "vermalab/exactalg/linear_solve.hpp"

namespace vermalab {

namespace {

std::string nlabel(int n, const Degree& d) { return "n=" + std::to_string(n) + " d=" + to_string(d) + " "; }

std::vector<Degree> lower_neighbours(const Degree& d) {
  std::vector<Degree> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    Degree e = d;
    e[i] -= 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace

nlohmann::json WhittakerComponent::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t a = 0; a < basis.size(); ++a)
    coeffs.push_back({{"pattern", basis[a].to_string()}, {"value", coefficients[a].to_string()}});
  return {{"degree", degree}, {"coefficients", coeffs}};
}

SparseMatrix WhittakerSolver::stacked_lowering(const Degree& d) const {
  const std::size_t m = v_.engine.dim(d);
  std::vector<SparseMatrix> parts;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    parts.push_back(v_.engine.E(static_cast<int>(i) + 1, static_cast<int>(i) + 2, d));
    rows += parts.back().rows();
  }
  SparseMatrix a(rows, m);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) a.set_row(off + r, p.row(r));
    off += p.rows();
  }
  return a;
}

std::size_t WhittakerSolver::kernel_dimension(const Degree& d) const {
  return exact::kernel_basis(stacked_lowering(d)).size();
}

const WhittakerComponent& WhittakerSolver::component(const Degree& d) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
  }
  WhittakerComponent c;
  c.degree = d;
  c.basis = v_.seeds->basis(d);
  if (total(d) == 0) {
    c.coefficients = {FieldElem(1L)};
  } else {
    std::vector<FieldElem> rhs;
    const FieldElem hinv = v_.generators().hbar().inverse();
    for (const auto& e : lower_neighbours(d))
      for (const auto& x : component(e).coefficients) rhs.push_back(x * hinv);
    auto res = exact::solve_linear(stacked_lowering(d), rhs);
    if (res.kind == exact::SolveKind::Inconsistent)
      throw WhittakerError("Whittaker system inconsistent at degree " + to_string(d));
    if (res.kind == exact::SolveKind::Underdetermined)
      throw WhittakerError("Whittaker system has a kernel of dimension " + std::to_string(res.kernel.size()) +
                           " at degree " + to_string(d));
    c.coefficients = std::move(res.solution);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(d, std::move(c)).first->second;
}

VerificationReport check_cyclicity(int n, const Degree& d, const Generators& g) {
  VerificationReport rep;
  rep.suite = "whittaker";
  VermaModule v(g);
  WhittakerSolver solver(v);
  const std::string pre = nlabel(n, d);
  const WhittakerComponent* comp = nullptr;
  try {
    comp = &solver.component(d);
    rep.check(pre + "unique solution", "unique Whittaker vector with v_0 = 1 and f_i v = v/h", true);
  } catch (const WhittakerError& e) {
    rep.check(pre + "unique solution", "unique Whittaker vector with v_0 = 1 and f_i v = v/h", false, e.what());
    return rep;
  }
  rep.check(pre + "zero kernel", "stacked lowering map is injective", solver.kernel_dimension(d) == 0 || total(d) == 0,
            std::to_string(solver.kernel_dimension(d)));
  std::string w;
  const FieldElem hinv = g.hbar().inverse();
  for (std::size_t i = 0; i < d.size() && w.empty(); ++i) {
    if (d[i] == 0) continue;
    Degree e = d;
    e[i] -= 1;
    auto lhs = v.engine.E(static_cast<int>(i) + 1, static_cast<int>(i) + 2, d).apply(comp->coefficients);
    const auto& lower = solver.component(e).coefficients;
    for (std::size_t r = 0; r < lhs.size(); ++r)
      if (!(lhs[r] - lower[r] * hinv).is_zero()) {
        w = "f_" + std::to_string(i + 1) + " row " + std::to_string(r);
        break;
      }
  }
  rep.check(pre + "recursion f_i v_d = v_{d-i}/h", "Whittaker recursion", w.empty(), w);
  std::string zero;
  for (std::size_t a = 0; a < comp->coefficients.size(); ++a)
    if (comp->coefficients[a].is_zero()) zero = comp->basis[a].to_string();
  rep.check(pre + "all coefficients nonzero", "Whittaker coefficients nonzero in the fixed-point basis", zero.empty(),
            zero);
  VerificationReport sep = check_spectrum_separation(n, d, GeneratorSet::TildeCasimir, g);
  rep.extend(sep);
  bool cyclic = zero.empty() && (sep.items[0].status != Status::Fail);
  rep.check(pre + "cyclic", "diagonal Gelfand-Tsetlin action on v_d spans V_d", cyclic,
            zero.empty() ? "spectrum collision" : "zero coefficient");
  return rep;
}

nlohmann::json RingTable::to_json() const {
  auto strs = [](const std::vector<FieldElem>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
  };
  nlohmann::json eig = nlohmann::json::array();
  for (const auto& row : eigenvalues) eig.push_back(strs(row));
  nlohmann::json prods = nlohmann::json::array();
  for (const auto& p : products) prods.push_back({{"product", p.lhs}, {"coefficients", strs(p.coefficients)}});
  return {{"degree", degree}, {"generators", generators}, {"basis", basis}, {"eigenvalues", eig}, {"products", prods}};
}

RingTable ring_structure(int n, const Degree& d, const Generators& g) {
  JointSpectrum js = joint_spectrum(n, d, GeneratorSet::DetBundlesBasis, g);
  const std::size_t m = js.basis.size();
  if (m > 1 && !js.collisions().empty())
    throw std::invalid_argument("the specialized spectrum does not separate V_" + to_string(d) +
                                "; choose a different specialization point");
  for (const auto& row : js.table)
    for (const auto& x : row)
      if (!x.is_constant()) throw std::invalid_argument("ring structure needs a full rational specialization");
  RingTable t;
  t.degree = d;
  t.generators = js.labels;
  const std::size_t ngen = js.labels.size();
  auto column = [&](std::size_t k) {
    std::vector<FieldElem> c;
    for (std::size_t a = 0; a < m; ++a) c.push_back(js.table[a][k]);
    return c;
  };
  auto times = [](std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
  };
  // Greedy monomial basis: grow by degree, keep vectors that raise the rank.
  t.basis.push_back("1");
  t.eigenvalues.push_back(std::vector<FieldElem>(m, FieldElem(1L)));
  std::vector<std::pair<std::vector<FieldElem>, std::string>> frontier = {{t.eigenvalues[0], ""}};
  auto rank_of = [&](const std::vector<std::vector<FieldElem>>& vs) {
    SparseMatrix a(vs.size(), m);
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < m; ++c) a.set(r, c, vs[r][c]);
    return exact::rank(a);
  };
  for (std::size_t deg = 1; t.basis.size() < m && deg <= m && ngen > 0; ++deg) {
    std::vector<std::pair<std::vector<FieldElem>, std::string>> next;
    for (const auto& [vec, name] : frontier)
      for (std::size_t k = 0; k < ngen; ++k) {
        auto cand = times(vec, column(k));
        std::string cname = name.empty() ? js.labels[k] : name + "*" + js.labels[k];
        next.emplace_back(cand, cname);
        auto trial = t.eigenvalues;
        trial.push_back(cand);
        if (t.basis.size() < m && rank_of(trial) == trial.size()) {
          t.eigenvalues.push_back(cand);
          t.basis.push_back(cname);
        }
      }
    frontier = std::move(next);
  }
  if (t.basis.size() < m) throw std::invalid_argument("generators do not span the diagonal algebra on V_" + to_string(d));
  // Expansion of each product of two generators over the basis: solve B^T c = v.
  SparseMatrix bt(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) bt.set(r, c, t.eigenvalues[c][r]);
  for (std::size_t a = 0; a < ngen; ++a)
    for (std::size_t b = 0; b < ngen; ++b) {
      auto res = exact::solve_linear(bt, times(column(a), column(b)));
      t.products.push_back({js.labels[a] + "*" + js.labels[b], res.solution});
    }
  return t;
}

VerificationReport check_ring(int n, const Degree& d, const Generators& g) {
  VerificationReport rep;
  rep.suite = "ring";
  const std::string pre = nlabel(n, d);
  JointSpectrum js = joint_spectrum(n, d, GeneratorSet::DetBundlesBasis, g);
  bool constant = true;
  for (const auto& row : js.table)
    for (const auto& x : row) constant = constant && x.is_constant();
  if (!constant) {
    rep.add({pre + "eigenvalue table", "determinant bundle classes act diagonally", Status::Pass, std::nullopt, js.to_json()});
    return rep;
  }
  RingTable t = ring_structure(n, d, g);
  rep.add({pre + "multiplication table", "algebra generated by determinant bundle classes", Status::Pass, std::nullopt,
           t.to_json()});
  const std::size_t m = js.basis.size();
  const std::size_t ngen = js.labels.size();
  std::string w;
  for (std::size_t a = 0; a < ngen && w.empty(); ++a)
    for (std::size_t b = 0; b < ngen && w.empty(); ++b) {
      const auto& coeffs = t.products[a * ngen + b].coefficients;
      for (std::size_t p = 0; p < m; ++p) {
        FieldElem acc;
        for (std::size_t k = 0; k < m; ++k) acc += coeffs[k] * t.eigenvalues[k][p];
        if (!(acc - js.table[p][a] * js.table[p][b]).is_zero()) {
          w = t.products[a * ngen + b].lhs + " at " + js.basis[p].to_string();
          break;
        }
      }
      if (w.empty() && !(coeffs == t.products[b * ngen + a].coefficients)) w = "not commutative: " + t.products[a * ngen + b].lhs;
    }
  rep.check(pre + "expansions reproduce eigenvalues", "structure constants by interpolation over the joint spectrum",
            w.empty(), w);
  return rep;
}

}  // namespace vermalab
