#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/exactalg/laurent.hpp"
#include "vermalab/patterns.hpp"
#include "vermalab/report.hpp"

namespace vermalab {

using exact::ExponentQuadratic;
using exact::LaurentMonomial;

/// t_ii = t_i v^{d_{i-1} - d_i + i - 1} on the weight space of p (d_0 = d_n = 0).
LaurentMonomial eig_quantum_cartan(const Pattern& p, int i);

/// Exponent of v in the eigenvalue of the quantum Casimir of gl(k), with
/// v^{lambda_kj} = t_j v^{j-1-d_kj} and t_j = v^{tau_j}.
ExponentQuadratic eig_quantum_casimir(const Pattern& p, int k);
/// Raw exponent times prod_{j<=k} t_jj^{k-2} v^{sum_{j<=k} (lambda_nj - j)(lambda_nj - j + 1) - k(k-1)(k-2)/3}.
ExponentQuadratic corrected_quantum_casimir_exponent(const Pattern& p, int k);

struct CancellationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Throws CancellationFailure when the tau-quadratic part survives.
LaurentMonomial eig_corrected_quantum_casimir(const Pattern& p, int k);

/// prod_{j<=k} t_j^{2 - 2 d_kj} v^{d_kj (d_kj - 1)}.
LaurentMonomial eig_det_class_K(const Pattern& p, int k);

/// (v^2 - 1)^{v2_minus_one} v^{v_exponent} prod t_i^{t[i-1]}.
struct NormalizationConstant {
  int v2_minus_one = 0;
  mpq_class v_exponent;
  std::vector<std::int64_t> t;

  bool integral() const { return v_exponent.get_den() == 1; }
  /// "(v^2-1)^-1 v^-1 t1^2"; "1" when trivial.
  std::string to_string() const;
};
NormalizationConstant normalization_constant(const Pattern& p);

/// Indices k >= 2 with d_k != 0 != d_{k-1}.
std::vector<int> k_generator_indices(const Degree& d);
/// Tuples of [D_k] eigenvalues over the allowed k separate the patterns of V_d.
VerificationReport check_K_separation(int n, const Degree& d);

/// tau-cancellation, the determinant-class identity, normalization-constant
/// integrality and separation for all |d| <= dmax.
VerificationReport check_ktheory(int n, int dmax);

}  // namespace vermalab
