#include "vermalab/shiftarg.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

namespace vermalab {

namespace {

FieldElem L(long c) { return FieldElem(c); }

std::string nlabel(int n, const Degree& d) { return "n=" + std::to_string(n) + " d=" + to_string(d) + " "; }

void require_symbolic_q(const Generators& g) {
  for (int l = 2; l <= g.n - 1; ++l)
    if (!(g.q(l) == FieldElem::q(l)))
      throw std::invalid_argument("q_" + std::to_string(l) + " must stay symbolic for this check");
}

using CMatrix = std::vector<std::vector<std::complex<double>>>;

CMatrix to_complex(const SparseMatrix& m) {
  CMatrix out(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) {
      if (!e.value.is_constant()) throw std::invalid_argument("matrix entry is not numeric: " + e.value.to_string());
      out[r][e.col] = e.value.constant_value().get_d();
    }
  return out;
}

std::complex<double> eval_poly(const exact::IntPoly& p, const std::vector<std::complex<double>>& slots) {
  std::complex<double> acc = 0.0;
  for (const auto& t : p.terms()) {
    std::complex<double> term = t.coeff.get_d();
    for (int s = 0; s < exact::kNumSlots; ++s) {
      unsigned e = t.mono.exponent(s);
      if (e != 0) term *= std::pow(slots[static_cast<std::size_t>(s)], static_cast<int>(e));
    }
    acc += term;
  }
  return acc;
}

}  // namespace

std::string to_string(QcNormalization n) {
  return n == QcNormalization::Printed ? "printed" : "shift-of-argument";
}

QcNormalization qc_normalization_from_string(const std::string& s) {
  if (s == "printed") return QcNormalization::Printed;
  if (s == "shift-of-argument") return QcNormalization::ShiftOfArgument;
  throw std::invalid_argument("unknown QC normalization '" + s + "'");
}

FieldElem qc_coefficient(int i, int k, int j, const Generators& g) {
  if (!(i < k && k < j)) throw std::invalid_argument("qc_coefficient needs i < k < j");
  auto tail = [&g](int l, int upto) {
    FieldElem p(1L);
    for (int t = l; t <= upto; ++t) p *= g.q(t);
    return p;
  };
  FieldElem num, den(1L);
  for (int l = i + 1; l <= k; ++l) num += tail(l, j - 1);
  for (int l = i + 1; l <= j - 1; ++l) den += tail(l, j - 1);
  return num / den;
}

SparseMatrix QcDecomposition::assemble() const {
  SparseMatrix acc = base;
  for (const auto& t : terms) acc = acc + t.block.scaled(t.coeff);
  return acc;
}

QcDecomposition qc_decomposition(const VermaModule& v, int k, const Degree& d, QcNormalization norm) {
  const int n = v.n();
  if (n <= 2) throw std::invalid_argument("no quantum parameters (Picard rank n-2 = 0)");
  if (k < 2 || k > n - 1) throw std::invalid_argument("QC_k needs 2 <= k <= n-1");
  const Generators& g = v.generators();
  QcDecomposition out;
  out.base = tilde_casimir_block(v, k, d);
  FieldElem weight = norm == QcNormalization::Printed ? L(1) : L(2);
  for (int i = 1; i < k; ++i)
    for (int j = k + 1; j <= n; ++j)
      out.terms.push_back({i, j, weight * qc_coefficient(i, k, j, g), v.engine.word({{i, j}, {j, i}}, d)});
  return out;
}

SparseMatrix qc_block(const VermaModule& v, int k, const Degree& d, QcNormalization norm) {
  return qc_decomposition(v, k, d, norm).assemble();
}

GradedOperator op_qc(const VermaModule& v, int k, const std::vector<Degree>& window, QcNormalization norm) {
  GradedOperator out(v.n(), Degree(static_cast<std::size_t>(v.n() - 1), 0));
  for (const auto& d : window) out.set_block(d, qc_block(v, k, d, norm));
  return out;
}

SparseMatrix quadratic_space_block(const OperatorEngine& eng, const std::vector<FieldElem>& mu,
                                   const std::vector<FieldElem>& h, const Degree& d) {
  const int n = eng.rank();
  if (mu.size() != static_cast<std::size_t>(n) || h.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("weights need n coordinates");
  std::size_t m = eng.dim(d);
  SparseMatrix acc(m, m);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      FieldElem den = mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(j - 1)];
      if (den.is_zero())
        throw NonRegularWeight("mu is not regular: <mu, alpha_" + std::to_string(i) + std::to_string(j) + "> = 0");
      FieldElem num = h[static_cast<std::size_t>(i - 1)] - h[static_cast<std::size_t>(j - 1)];
      if (num.is_zero()) continue;
      acc = acc + eng.word({{i, j}, {j, i}}, d).scaled(num / den);
    }
  return acc;
}

GradedOperator quadratic_space_element(const VermaModule& v, const std::vector<FieldElem>& mu,
                                       const std::vector<FieldElem>& h, const std::vector<Degree>& window) {
  GradedOperator out(v.n(), Degree(static_cast<std::size_t>(v.n() - 1), 0));
  for (const auto& d : window) out.set_block(d, quadratic_space_block(v.engine, mu, h, d));
  return out;
}

std::vector<FieldElem> from_fundamental(const std::vector<FieldElem>& c) {
  std::vector<FieldElem> w(c.size() + 1);
  for (std::size_t a = c.size(); a-- > 0;) w[a] = w[a + 1] + c[a];
  return w;
}

std::vector<FieldElem> mu_of_q(const Generators& g) { return h_of_q(g.n, g); }

std::vector<FieldElem> h_of_q(int k, const Generators& g) {
  std::vector<FieldElem> c(static_cast<std::size_t>(g.n - 1));
  for (int i = 1; i < k; ++i) {
    FieldElem p(1L);
    for (int l = i + 1; l <= g.n; ++l) p *= g.q(l);
    c[static_cast<std::size_t>(i - 1)] = p;
  }
  return from_fundamental(c);
}

VerificationReport check_quadratic_commutativity(int n, int dmax, const Generators& g) {
  VerificationReport rep;
  rep.suite = "quadratic-space";
  VermaModule v(g);
  std::vector<FieldElem> mu, h1, h2, mu_scaled, h1_scaled;
  for (int i = 1; i <= n; ++i) {
    mu.push_back(L(static_cast<long>(i) * i + 3 * i));
    h1.push_back(L(i == 1 ? 1 : 0));
    h2.push_back(L(static_cast<long>(n - i) * (n - i) - 2 * i));
    mu_scaled.push_back(mu.back() * FieldElem(mpq_class(-7, 3)));
    h1_scaled.push_back(h1.back() * FieldElem(mpq_class(-7, 3)));
  }
  for (const auto& d : degrees_up_to(n, dmax)) {
    const std::string pre = nlabel(n, d);
    SparseMatrix a = quadratic_space_block(v.engine, mu, h1, d);
    SparseMatrix b = quadratic_space_block(v.engine, mu, h2, d);
    SparseMatrix c = a * b - b * a;
    rep.check(pre + "[Q(mu,h),Q(mu,h')] = 0", "quadratic elements for a fixed regular mu commute", c.is_zero(),
              first_nonzero(c));
    SparseMatrix s = quadratic_space_block(v.engine, mu_scaled, h1_scaled, d);
    rep.check(pre + "Q(c mu,c h) = Q(mu,h)", "quadratic space is invariant under dilation of mu", s == a,
              first_nonzero(s - a));
  }
  return rep;
}

VerificationReport check_qc_commutativity(int n, const Degree& d, const Generators& g, QcNormalization norm) {
  VerificationReport rep;
  rep.suite = "qc-commutativity";
  rep.config = {{"normalization", to_string(norm)}};
  const std::string pre = nlabel(n, d);
  if (n <= 3) {
    rep.add({pre + "[QC_k,QC_l] = 0", "fewer than two quantum Casimirs", Status::Vacuous, std::nullopt, {}});
    return rep;
  }
  VermaModule v(g);
  std::vector<SparseMatrix> qc;
  for (int k = 2; k <= n - 1; ++k) qc.push_back(qc_block(v, k, d, norm));
  for (int k = 2; k <= n - 1; ++k)
    for (int l = k + 1; l <= n - 1; ++l) {
      const auto& a = qc[static_cast<std::size_t>(k - 2)];
      const auto& b = qc[static_cast<std::size_t>(l - 2)];
      SparseMatrix c = a * b - b * a;
      std::string label = pre + "[QC_" + std::to_string(k) + ",QC_" + std::to_string(l) + "] = 0 (" + to_string(norm) + ")";
      std::string anchor = "quantum Casimirs commute";
      if (norm == QcNormalization::Printed && !c.is_zero())
        rep.finding(label, anchor + "; the printed correction weight does not commute", first_nonzero(c));
      else
        rep.check(label, anchor, c.is_zero(), first_nonzero(c));
    }
  return rep;
}

VerificationReport check_qc_degeneration(int n, int dmax, const Generators& g) {
  VerificationReport rep;
  rep.suite = "qc-degeneration";
  require_symbolic_q(g);
  VermaModule v(g);
  exact::Assignment zero;
  for (int l = 2; l <= n - 1; ++l) zero.set(exact::Symbol::q(l), 0);
  for (const auto& d : degrees_up_to(n, dmax))
    for (int k = 2; k <= n - 1; ++k)
      for (auto norm : {QcNormalization::Printed, QcNormalization::ShiftOfArgument}) {
        SparseMatrix at0 = qc_block(v, k, d, norm).map([&zero](const FieldElem& x) { return x.substitute(zero); });
        SparseMatrix diff = at0 - tilde_casimir_block(v, k, d);
        rep.check(nlabel(n, d) + "QC_" + std::to_string(k) + "|q=0 = tildeCas_" + std::to_string(k) + " (" +
                      to_string(norm) + ")",
                  "quantum Casimir degenerates to the corrected Casimir", diff.is_zero(), first_nonzero(diff));
      }
  return rep;
}

VerificationReport check_qc_cross(int n, int dmax, const Generators& g) {
  VerificationReport rep;
  rep.suite = "qc-cross";
  VermaModule v(g);
  const auto mu = mu_of_q(g);
  for (const auto& d : degrees_up_to(n, dmax))
    for (int k = 2; k <= n - 1; ++k) {
      const std::string pre = nlabel(n, d) + "k=" + std::to_string(k) + " ";
      SparseMatrix q = quadratic_space_block(v.engine, mu, h_of_q(k, g), d);
      std::size_t m = q.rows();
      SparseMatrix expanded(m, m);
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) expanded = expanded + v.engine.word({{i, j}, {j, i}}, d);
      for (int i = 1; i < k; ++i)
        for (int j = k + 1; j <= n; ++j)
          expanded = expanded + v.engine.word({{i, j}, {j, i}}, d).scaled(qc_coefficient(i, k, j, g));
      SparseMatrix diff = q - expanded;
      rep.check(pre + "Q(mu(q),h_k) = expansion", "quadratic element at mu(q), h_k(q) matches the expanded coefficients",
                diff.is_zero(), first_nonzero(diff));
      SparseMatrix cartan(m, m);
      FieldElem scalar = L(static_cast<long>(k) * (k - 1) * (k - 2) / 3);
      for (int i = 1; i <= k; ++i) {
        cartan = cartan + v.engine.word({{i, i}, {i, i}}, d) + v.engine.E(i, i, d).scaled(L(2 * i + 1 - 2 * k));
        FieldElem xh = g.x(i) / g.hbar();
        scalar -= xh * (xh - L(1));
      }
      cartan = cartan + SparseMatrix::diagonal(std::vector<FieldElem>(m, scalar));
      SparseMatrix rest = qc_block(v, k, d, QcNormalization::ShiftOfArgument) - q.scaled(L(2)) - cartan;
      rep.check(pre + "QC_k - 2Q(mu(q),h_k) is Cartan", "quantum Casimir is twice the quadratic element up to Cartan terms",
                rest.is_zero(), first_nonzero(rest));
    }
  return rep;
}

VerificationReport check_flatness(int n, const Degree& d, const Generators& g, QcNormalization norm) {
  VerificationReport rep;
  rep.suite = "flatness";
  rep.config = {{"normalization", to_string(norm)}};
  const std::string pre = nlabel(n, d);
  if (n <= 3) {
    rep.add({pre + "curvature", "one quantum parameter; curvature vanishes identically", Status::Vacuous, std::nullopt,
             {}});
    return rep;
  }
  require_symbolic_q(g);
  VermaModule v(g);
  std::vector<QcDecomposition> dec;
  for (int k = 2; k <= n - 1; ++k) dec.push_back(qc_decomposition(v, k, d, norm));
  auto log_derivative = [](const QcDecomposition& qc, int l) {
    const int slot = exact::Symbol::q(l).slot();
    SparseMatrix acc(qc.base.rows(), qc.base.cols());
    for (const auto& t : qc.terms) acc = acc + t.block.scaled(FieldElem::q(l) * t.coeff.derivative(slot));
    return acc;
  };
  for (int k = 2; k <= n - 1; ++k)
    for (int l = k + 1; l <= n - 1; ++l) {
      const auto& a = dec[static_cast<std::size_t>(k - 2)];
      const auto& b = dec[static_cast<std::size_t>(l - 2)];
      SparseMatrix ma = a.assemble(), mb = b.assemble();
      SparseMatrix c1 = ma * mb - mb * ma;
      std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + ") " + to_string(norm);
      if (norm == QcNormalization::Printed && !c1.is_zero())
        rep.finding(pre + "C1 " + tag, "commutator part of the curvature; printed weight", first_nonzero(c1));
      else
        rep.check(pre + "C1 " + tag, "commutator part of the curvature", c1.is_zero(), first_nonzero(c1));
      SparseMatrix c2 = log_derivative(b, k) - log_derivative(a, l);
      if (c2.is_zero())
        rep.check(pre + "C2 " + tag, "derivative part of the curvature", true);
      else
        rep.finding(pre + "C2 " + tag, "derivative part of the curvature is nonzero", first_nonzero(c2));
    }
  return rep;
}

nlohmann::json MonodromyResult::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& z : row) r.push_back({z.real(), z.imag()});
    rows.push_back(r);
  }
  return {{"matrix", rows}, {"error_estimate", error_estimate}, {"steps", steps}};
}

namespace {

struct NumericQc {
  CMatrix base;
  std::vector<std::pair<FieldElem, CMatrix>> terms;
};

CMatrix transport_once(const std::vector<NumericQc>& qcs, int n, double kappa, const std::vector<PathSegment>& path,
                       double initial_step, double tol, std::size_t max_steps, std::size_t& steps) {
  using state = std::vector<std::complex<double>>;
  namespace ode = boost::numeric::odeint;
  const std::size_t m = qcs.front().base.size();
  const std::size_t nq = static_cast<std::size_t>(n - 2);
  state x(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) x[i * m + i] = 1.0;
  steps = 0;
  for (const auto& seg : path) {
    if (seg.from.size() != nq || seg.to.size() != nq)
      throw std::invalid_argument("path points need " + std::to_string(nq) + " coordinates");
    std::vector<std::complex<double>> delta(nq);
    for (std::size_t k = 0; k < nq; ++k) {
      if (std::abs(seg.from[k]) == 0.0 || std::abs(seg.to[k]) == 0.0)
        throw TransportError("path touches the divisor q = 0");
      delta[k] = std::log(seg.to[k] / seg.from[k]);
    }
    auto rhs = [&](const state& y, state& dy, double t) {
      std::vector<std::complex<double>> slots(exact::kNumSlots, 0.0);
      for (std::size_t k = 0; k < nq; ++k)
        slots[static_cast<std::size_t>(exact::Symbol::q(static_cast<int>(k) + 2).slot())] =
            seg.from[k] * std::exp(t * delta[k]);
      CMatrix a(m, std::vector<std::complex<double>>(m, 0.0));
      for (std::size_t k = 0; k < nq; ++k) {
        const auto& qc = qcs[k];
        std::complex<double> w = -kappa * delta[k];
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) a[r][c] += w * qc.base[r][c];
        for (const auto& [coeff, mat] : qc.terms) {
          std::complex<double> den = eval_poly(coeff.den(), slots);
          if (std::abs(den) < 1e-12) throw TransportError("pole encountered on path at t = " + std::to_string(t));
          std::complex<double> cw = w * eval_poly(coeff.num(), slots) / den;
          for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) a[r][c] += cw * mat[r][c];
        }
      }
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          std::complex<double> acc = 0.0;
          for (std::size_t s = 0; s < m; ++s) acc += a[r][s] * y[s * m + c];
          dy[r * m + c] = acc;
        }
    };
    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<state>>(tol, tol);
    ode::integrate_adaptive(stepper, rhs, x, 0.0, 1.0, initial_step, [&](const state&, double) {
      if (++steps > max_steps) throw TransportError("tolerance not met within the step budget");
    });
  }
  CMatrix out(m, std::vector<std::complex<double>>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out[r][c] = x[r * m + c];
  return out;
}

}  // namespace

MonodromyResult monodromy_transport(const ConnectionSpec& spec, const std::vector<PathSegment>& path,
                                    const StepControl& control) {
  if (spec.n < 3) throw std::invalid_argument("no quantum parameters (Picard rank n-2 = 0)");
  if (path.empty()) throw std::invalid_argument("empty path");
  for (int i = 1; i <= spec.n; ++i)
    if (!spec.point.get(exact::Symbol::x(i).slot())) throw std::invalid_argument("monodromy needs numeric values for x");
  if (!spec.point.get(exact::Symbol::hbar().slot()) || *spec.point.get(exact::Symbol::hbar().slot()) == 0)
    throw std::invalid_argument("monodromy needs a nonzero numeric hbar");
  // Individual matrix coefficients may have poles at integral points; only the
  // assembled quadratic blocks are specialized.
  VermaModule v(Generators::symbolic(spec.n));
  auto at_point = [&spec](const SparseMatrix& m) {
    try {
      return to_complex(m.map([&spec](const FieldElem& x) { return x.substitute(spec.point); }));
    } catch (const exact::PoleError& e) {
      throw TransportError(std::string("connection matrix has a pole at the specialization: ") + e.what());
    }
  };
  std::vector<NumericQc> qcs;
  for (int k = 2; k <= spec.n - 1; ++k) {
    QcDecomposition dec = qc_decomposition(v, k, spec.degree, spec.norm);
    NumericQc nq{at_point(dec.base), {}};
    for (const auto& t : dec.terms) nq.terms.emplace_back(t.coeff, at_point(t.block));
    qcs.push_back(std::move(nq));
  }
  MonodromyResult res;
  std::size_t coarse_steps = 0;
  CMatrix coarse = transport_once(qcs, spec.n, spec.kappa, path, control.initial_step, control.tolerance,
                                  control.max_steps, coarse_steps);
  res.matrix = transport_once(qcs, spec.n, spec.kappa, path, control.initial_step / 2, control.tolerance / 64,
                              control.max_steps, res.steps);
  res.error_estimate = max_distance(coarse, res.matrix);
  return res;
}

std::vector<PathSegment> parse_path(const nlohmann::json& j) {
  auto point = [](const nlohmann::json& p) {
    std::vector<std::complex<double>> out;
    for (const auto& z : p) {
      if (z.is_number())
        out.emplace_back(z.get<double>(), 0.0);
      else if (z.is_array() && z.size() == 2)
        out.emplace_back(z[0].get<double>(), z[1].get<double>());
      else
        throw std::invalid_argument("path coordinate must be a number or [re, im]");
    }
    return out;
  };
  std::vector<PathSegment> segs;
  for (const auto& s : j.at("segments")) segs.push_back({point(s.at("from")), point(s.at("to"))});
  return segs;
}

std::vector<PathSegment> polygon(const std::vector<std::vector<std::complex<double>>>& points) {
  std::vector<PathSegment> segs;
  for (std::size_t a = 0; a < points.size(); ++a) segs.push_back({points[a], points[(a + 1) % points.size()]});
  return segs;
}

double max_distance(const CMatrix& a, const CMatrix& b) {
  double d = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c) d = std::max(d, std::abs(a[r][c] - b[r][c]));
  return d;
}

double distance_to_identity(const CMatrix& a) {
  CMatrix id(a.size(), std::vector<std::complex<double>>(a.size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) id[i][i] = 1.0;
  return max_distance(a, id);
}

}  // namespace vermalab
