#include "vermalab/ktheory.hpp"

namespace vermalab {

namespace {

using Q = ExponentQuadratic;

long deg_at(const Degree& d, int i) {
  return (i <= 0 || i > static_cast<int>(d.size())) ? 0 : d[static_cast<std::size_t>(i - 1)];
}

std::string nlabel(int n, const Degree& d) { return "n=" + std::to_string(n) + " d=" + to_string(d) + " "; }

/// lambda_kj = tau_j + j - 1 - d_kj.
Q lambda(const Pattern& p, int k, int j) {
  const int n = p.n();
  return Q::tau(n, j) + Q::constant(n, j - 1 - p.at(k, j));
}

}  // namespace

LaurentMonomial eig_quantum_cartan(const Pattern& p, int i) {
  const int n = p.n();
  const Degree d = p.degree();
  return LaurentMonomial::t_var(n, i) * LaurentMonomial::v_pow(n, deg_at(d, i - 1) - deg_at(d, i) + i - 1);
}

ExponentQuadratic eig_quantum_casimir(const Pattern& p, int k) {
  const int n = p.n();
  if (k < 1 || k > n) throw std::invalid_argument("quantum Casimir index out of range");
  Q acc(n);
  for (int j = 1; j <= k; ++j) {
    Q l = lambda(p, k, j);
    acc = acc - l * (l + Q::constant(n, k - 2 * j + 1));
  }
  return acc;
}

ExponentQuadratic corrected_quantum_casimir_exponent(const Pattern& p, int k) {
  const int n = p.n();
  Q acc = eig_quantum_casimir(p, k);
  for (int j = 1; j <= k; ++j) {
    acc = acc + Q::from_monomial(eig_quantum_cartan(p, j)).scaled(k - 2);
    Q ln = lambda(p, n, j);
    acc = acc + (ln - Q::constant(n, j)) * (ln - Q::constant(n, j - 1));
  }
  return acc - Q::constant(n, static_cast<std::int64_t>(k) * (k - 1) * (k - 2) / 3);
}

LaurentMonomial eig_corrected_quantum_casimir(const Pattern& p, int k) {
  Q e = corrected_quantum_casimir_exponent(p, k);
  auto m = e.as_monomial();
  if (!m) throw CancellationFailure("tau-quadratic part survives: " + e.to_string());
  return *m;
}

LaurentMonomial eig_det_class_K(const Pattern& p, int k) {
  const int n = p.n();
  if (k < 1 || k > n - 1) throw std::invalid_argument("determinant class index out of range");
  LaurentMonomial acc = LaurentMonomial::one(n);
  for (int j = 1; j <= k; ++j) {
    long dkj = p.at(k, j);
    acc = acc * LaurentMonomial::t_var(n, j, 2 - 2 * dkj) * LaurentMonomial::v_pow(n, dkj * (dkj - 1));
  }
  return acc;
}

std::string NormalizationConstant::to_string() const {
  std::string out;
  auto add = [&out](const std::string& s) { out += (out.empty() ? "" : " ") + s; };
  if (v2_minus_one != 0) add("(v^2-1)^" + std::to_string(v2_minus_one));
  if (v_exponent != 0) add("v^" + v_exponent.get_str());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) add("t" + std::to_string(i + 1) + (t[i] == 1 ? "" : "^" + std::to_string(t[i])));
  return out.empty() ? "1" : out;
}

NormalizationConstant normalization_constant(const Pattern& p) {
  const int n = p.n();
  const Degree d = p.degree();
  NormalizationConstant c;
  c.t.assign(static_cast<std::size_t>(n), 0);
  long total = 0;
  for (int v : d) total += v;
  c.v2_minus_one = -static_cast<int>(total);
  mpq_class e = total;
  for (int i = 1; i <= n - 1; ++i) {
    e += mpq_class(static_cast<long>(i) * deg_at(d, i - 1) * deg_at(d, i));
    e -= mpq_class((2 * i + 1) * deg_at(d, i) * deg_at(d, i), 2);
    c.t[static_cast<std::size_t>(i - 1)] += static_cast<std::int64_t>(i) * (deg_at(d, i) - deg_at(d, i - 1));
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      long dij = p.at(i, j);
      e -= mpq_class(dij * dij, 2);
      c.t[static_cast<std::size_t>(j - 1)] += dij;
    }
  e.canonicalize();
  c.v_exponent = e;
  return c;
}

std::vector<int> k_generator_indices(const Degree& d) {
  std::vector<int> ks;
  for (int k = 2; k <= static_cast<int>(d.size()); ++k)
    if (deg_at(d, k) != 0 && deg_at(d, k - 1) != 0) ks.push_back(k);
  return ks;
}

VerificationReport check_K_separation(int n, const Degree& d) {
  VerificationReport rep;
  rep.suite = "k-separation";
  const auto basis = enumerate_patterns(n, d);
  const auto ks = k_generator_indices(d);
  const std::string label = nlabel(n, d) + "[D_k] spectrum separates";
  const std::string anchor = "determinant classes with d_k != 0 != d_{k-1} separate fixed points";
  if (basis.size() <= 1) {
    rep.add({label, anchor, Status::Vacuous, std::nullopt, {{"dimension", basis.size()}}});
    return rep;
  }
  std::map<std::vector<LaurentMonomial>, std::size_t> seen;
  std::string w;
  for (std::size_t a = 0; a < basis.size() && w.empty(); ++a) {
    std::vector<LaurentMonomial> key;
    for (int k : ks) key.push_back(eig_det_class_K(basis[a], k));
    auto [it, fresh] = seen.emplace(key, a);
    if (!fresh) w = basis[it->second].to_string() + " and " + basis[a].to_string();
  }
  rep.check(label, anchor, w.empty(), w);
  return rep;
}

VerificationReport check_ktheory(int n, int dmax) {
  VerificationReport rep;
  rep.suite = "ktheory";
  for (const auto& d : degrees_up_to(n, dmax)) {
    const std::string pre = nlabel(n, d);
    const auto basis = enumerate_patterns(n, d);
    std::string w_tau, w_square, w_inverse_fails, w_int;
    nlohmann::json example;
    for (const auto& p : basis) {
      for (int k = 1; k <= n; ++k) {
        Q e = corrected_quantum_casimir_exponent(p, k);
        if (!e.quadratic_zero()) {
          if (w_tau.empty()) w_tau = p.to_string() + " k=" + std::to_string(k) + ": " + e.to_string();
          continue;
        }
        if (k > n - 1) continue;
        LaurentMonomial corrected = *e.as_monomial();
        LaurentMonomial dk = eig_det_class_K(p, k);
        if (!(dk * dk * corrected).is_one() && w_square.empty()) {
          w_square = p.to_string() + " k=" + std::to_string(k) + ": [D_k]=" + dk.to_string() +
                     " corrected=" + corrected.to_string() + " product=" + (dk * dk * corrected).to_string();
          example = {{"pattern", p.to_string()}, {"k", k}, {"det_class", dk.to_string()},
                     {"corrected_casimir", corrected.to_string()}};
        }
        if (!(dk * corrected).is_one() && w_inverse_fails.empty())
          w_inverse_fails = p.to_string() + " k=" + std::to_string(k);
      }
      auto c = normalization_constant(p);
      if (!c.integral() && w_int.empty()) w_int = p.to_string() + ": " + c.to_string();
    }
    rep.check(pre + "tau-quadratic part cancels", "corrected quantum Casimir eigenvalue is a Laurent monomial",
              w_tau.empty(), w_tau);
    if (n >= 2) {
      rep.check(pre + "[D_k]^2 corrected = 1", "determinant class is the inverse square root of the corrected Casimir",
                w_square.empty(), w_square);
      if (!w_square.empty() && w_inverse_fails.empty())
        rep.finding(pre + "[D_k] corrected = 1", "corrected quantum Casimir eigenvalue equals the inverse determinant class",
                    "holds on every pattern", example);
    }
    rep.check(pre + "normalization exponent integral", "v-exponent of the normalization constant is an integer",
              w_int.empty(), w_int);
    rep.extend(check_K_separation(n, d));
  }
  return rep;
}

}  // namespace vermalab
