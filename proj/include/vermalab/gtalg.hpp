#pragma once

#include <string>
#include <vector>

#include "vermalab/verma.hpp"

namespace vermalab {

/// Cas_k = sum_{i,j<=k} E_ij E_ji on V_d, summed in (i,j) lexicographic order.
SparseMatrix casimir_block(const OperatorEngine& eng, int k, const Degree& d);
/// Cas_k + (2-k) sum_{j<=k} E_jj - sum_{j<=k} x_j/h (x_j/h - 1) + k(k-1)(k-2)/3.
SparseMatrix tilde_casimir_block(const VermaModule& v, int k, const Degree& d);

GradedOperator op_casimir(const VermaModule& v, int k, const std::vector<Degree>& window);
GradedOperator op_tilde_casimir(const VermaModule& v, int k, const std::vector<Degree>& window);

/// sum_{j<=k} lambda_kj (lambda_kj + k - 2j + 1).
FieldElem eig_casimir(const Pattern& p, int k, const Generators& g);
/// sum_{j<=k} 2(1 - d_kj) x_j / h + d_kj (d_kj - 1).
FieldElem eig_tilde_casimir(const Pattern& p, int k, const Generators& g);
/// First Chern class of the determinant bundle D_k:
/// sum_{j<=k} (1 - d_kj) x_j + d_kj (d_kj - 1) h / 2.
FieldElem eig_det_bundle(const Pattern& p, int k, const Generators& g);

enum class ChernPart { Diag, Kunneth };
/// e_j(-x_1..-x_i) at infinity.
FieldElem chern_at_infinity(int i, int j, const Generators& g);
/// e_j(-x_1 + d_i1 h, ..., -x_i + d_ii h) at zero.
FieldElem chern_at_zero(const Pattern& p, int i, int j, const Generators& g);
/// Diag part (e_inf + e_0)/2, Kunneth part (e_inf - e_0)/(2h).
FieldElem eig_chern(const Pattern& p, int i, int j, ChernPart part, const Generators& g);

enum class GeneratorSet {
  TildeCasimir,     // k = 2..n-1
  Casimir,          // k = 1..n
  DetBundles,       // k = 1..n-1
  DetBundlesBasis,  // k >= 2 with d_k != 0 != d_{k-1}
  Chern             // both parts for 1 <= j <= i <= n-1
};

std::string to_string(GeneratorSet s);

struct JointSpectrum {
  Degree degree;
  std::vector<std::string> labels;
  std::vector<Pattern> basis;
  std::vector<std::vector<FieldElem>> table;  // table[pattern][generator]

  /// Pairs of basis indices whose tuples coincide.
  std::vector<std::pair<std::size_t, std::size_t>> collisions() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// `ks` overrides the default index range of Casimir-type sets when nonempty.
JointSpectrum joint_spectrum(int n, const Degree& d, GeneratorSet set, const Generators& g,
                             const std::vector<int>& ks = {});

VerificationReport check_spectrum_separation(int n, const Degree& d, GeneratorSet set, const Generators& g,
                                             const std::vector<int>& ks = {});

/// Diagonality and closed-form eigenvalues of Cas_k and the corrected Casimirs,
/// the determinant-bundle identity, commutativity of the Casimirs and the
/// h-divisibility of the Chern differences, on all V_d with |d| <= dmax.
VerificationReport check_casimirs(int n, int dmax, const Generators& g);

}  // namespace vermalab
