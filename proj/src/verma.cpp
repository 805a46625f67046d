#include "vermalab/verma.hpp"

namespace vermalab {

const std::vector<Pattern>& VermaSeeds::basis(const Degree& d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = bases_.find(d);
  if (it == bases_.end()) it = bases_.emplace(d, enumerate_patterns(g_.n, d)).first;
  return it->second;
}

FieldElem VermaSeeds::cartan_scalar(int i, const Degree& d) const {
  auto deg = [&d, this](int k) { return (k <= 0 || k >= g_.n) ? 0 : d[static_cast<std::size_t>(k - 1)]; };
  return g_.lowest_weight(i) + FieldElem(static_cast<long>(deg(i - 1) - deg(i)));
}

SparseMatrix VermaSeeds::cartan(int i, const Degree& d) const {
  std::size_t m = dim(d);
  return SparseMatrix::diagonal(std::vector<FieldElem>(m, cartan_scalar(i, d)));
}

FieldElem VermaSeeds::raise_coefficient(const Pattern& p, int i, int j) const {
  const FieldElem& h = g_.hbar();
  const int dij = p.at(i, j);
  FieldElem num(1L), den(1L);
  for (int k = 1; k <= i; ++k) {
    if (k == j) continue;
    den *= g_.x(j) - g_.x(k) + FieldElem(static_cast<long>(p.at(i, k) - dij)) * h;
  }
  for (int k = 1; k <= i - 1; ++k) num *= g_.x(j) - g_.x(k) + FieldElem(static_cast<long>(p.at(i - 1, k) - dij)) * h;
  return -(num / (den * h));
}

FieldElem VermaSeeds::lower_coefficient(const Pattern& p, int i, int j) const {
  const FieldElem& h = g_.hbar();
  const int dij = p.at(i, j);
  FieldElem num(1L), den(1L);
  for (int k = 1; k <= i; ++k) {
    if (k == j) continue;
    den *= g_.x(k) - g_.x(j) + FieldElem(static_cast<long>(dij - p.at(i, k))) * h;
  }
  for (int k = 1; k <= i + 1; ++k) {
    int below = (i + 1 == g_.n) ? 0 : p.at(i + 1, k);
    num *= g_.x(k) - g_.x(j) + FieldElem(static_cast<long>(dij - below)) * h;
  }
  return num / (den * h);
}

SparseMatrix VermaSeeds::raise(int i, const Degree& d) const {
  Degree dst = d;
  dst[static_cast<std::size_t>(i - 1)] += 1;
  const auto& src_basis = basis(d);
  const auto& dst_basis = basis(dst);
  SparseMatrix m(dst_basis.size(), src_basis.size());
  for (std::size_t c = 0; c < src_basis.size(); ++c) {
    const Pattern& p = src_basis[c];
    for (int j = 1; j <= i; ++j) {
      Pattern t = p.with(i, j, p.at(i, j) + 1);
      if (!t.is_valid()) continue;
      m.set(pattern_index(dst_basis, t), c, raise_coefficient(p, i, j));
    }
  }
  return m;
}

SparseMatrix VermaSeeds::lower(int i, const Degree& d) const {
  Degree dst = d;
  dst[static_cast<std::size_t>(i - 1)] -= 1;
  const auto& src_basis = basis(d);
  if (!is_nonnegative(dst)) return SparseMatrix(0, src_basis.size());
  const auto& dst_basis = basis(dst);
  SparseMatrix m(dst_basis.size(), src_basis.size());
  for (std::size_t c = 0; c < src_basis.size(); ++c) {
    const Pattern& p = src_basis[c];
    for (int j = 1; j <= i; ++j) {
      Pattern t = p.with(i, j, p.at(i, j) - 1);
      if (!t.is_valid()) continue;
      m.set(pattern_index(dst_basis, t), c, lower_coefficient(p, i, j));
    }
  }
  return m;
}

VermaModule::VermaModule(const Generators& g)
    : seeds(std::make_shared<VermaSeeds>(g)), engine(seeds) {}

GradedOperator op_cartan(const VermaModule& v, int i, const std::vector<Degree>& window) {
  return materialize(v.engine, i, i, window);
}

GradedOperator op_e(const VermaModule& v, int i, const std::vector<Degree>& window) {
  return materialize(v.engine, i + 1, i, window);
}

GradedOperator op_f(const VermaModule& v, int i, const std::vector<Degree>& window) {
  return materialize(v.engine, i, i + 1, window);
}

GradedOperator op_Eij(const VermaModule& v, int i, int j, const std::vector<Degree>& window) {
  return materialize(v.engine, i, j, window);
}

FieldElem fixed_point_to_gt_scalar(const Degree& d, const Generators& g) { return (-g.hbar()).pow(-total(d)); }

VerificationReport check_gl_relations(const OperatorEngine& eng, int dmax, const std::string& family) {
  const int n = eng.rank();
  VerificationReport rep;
  rep.suite = "gl-relations";
  std::vector<Letter> gens;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) gens.emplace_back(a, b);
  const auto degrees = degrees_up_to(n, dmax);
  auto name = [&family](Letter l) {
    return "E" + family + std::to_string(l.first) + std::to_string(l.second);
  };
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = x + 1; y < gens.size(); ++y) {
      auto [a, b] = gens[x];
      auto [c, d] = gens[y];
      std::string witness;
      for (const auto& deg : degrees) {
        SparseMatrix lhs = eng.commutator(gens[x], gens[y], deg);
        SparseMatrix rhs(lhs.rows(), lhs.cols());
        if (b == c) rhs = rhs + eng.E(a, d, deg);
        if (d == a) rhs = rhs - eng.E(c, b, deg);
        SparseMatrix diff = lhs - rhs;
        if (!diff.is_zero()) {
          witness = "degree " + to_string(deg) + " entry " + first_nonzero(diff);
          break;
        }
      }
      std::string label = "[" + name(gens[x]) + "," + name(gens[y]) + "]";
      rep.check(label, "gl(n) commutation relation", witness.empty(), witness);
    }
  }
  return rep;
}

VerificationReport check_gl_relations(int n, int dmax, const Generators& g) {
  if (g.n != n) throw std::invalid_argument("generator rank mismatch");
  VermaModule v(g);
  return check_gl_relations(v.engine, dmax);
}

}  // namespace vermalab
