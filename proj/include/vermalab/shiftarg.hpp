#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/gtalg.hpp"

namespace vermalab {

/// Weight of the correction sum_{i<k<j} c_ikj E_ij E_ji added to tildeCas_k.
/// Printed: weight 1.  ShiftOfArgument: weight 2, which equals twice the
/// quadratic shift-of-argument element plus a Cartan polynomial.
enum class QcNormalization { Printed, ShiftOfArgument };

std::string to_string(QcNormalization n);
QcNormalization qc_normalization_from_string(const std::string& s);

/// (sum_{l=i+1}^{k} q_l..q_{j-1}) / (1 + sum_{l=i+1}^{j-1} q_l..q_{j-1}), q_n = 1.
FieldElem qc_coefficient(int i, int k, int j, const Generators& g);

/// QC_k on V_d written as base + sum coeff * E_ij E_ji, with coefficients
/// depending on q only.
struct QcDecomposition {
  SparseMatrix base;
  struct Term {
    int i = 0, j = 0;
    FieldElem coeff;
    SparseMatrix block;
  };
  std::vector<Term> terms;

  SparseMatrix assemble() const;
};

QcDecomposition qc_decomposition(const VermaModule& v, int k, const Degree& d, QcNormalization norm);
SparseMatrix qc_block(const VermaModule& v, int k, const Degree& d, QcNormalization norm);
/// Throws std::invalid_argument for n = 2 and for k outside 2..n-1.
GradedOperator op_qc(const VermaModule& v, int k, const std::vector<Degree>& window, QcNormalization norm);

/// Raised when <mu, alpha> vanishes for some positive root.
struct NonRegularWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weights are diagonal coordinate vectors (w_1..w_n); <w, alpha_ij> = w_i - w_j.
/// sum_{i<j} (<h,alpha_ij> / <mu,alpha_ij>) E_ij E_ji on V_d.
SparseMatrix quadratic_space_block(const OperatorEngine& eng, const std::vector<FieldElem>& mu,
                                   const std::vector<FieldElem>& h, const Degree& d);
GradedOperator quadratic_space_element(const VermaModule& v, const std::vector<FieldElem>& mu,
                                       const std::vector<FieldElem>& h, const std::vector<Degree>& window);

/// sum_i c_i omega_i in coordinates, omega_i = eps_1 + ... + eps_i.
std::vector<FieldElem> from_fundamental(const std::vector<FieldElem>& c);
/// mu(q) = sum_{i<n} q_{i+1}..q_n omega_i.
std::vector<FieldElem> mu_of_q(const Generators& g);
/// h_k(q) = sum_{i<k} q_{i+1}..q_n omega_i.
std::vector<FieldElem> h_of_q(int k, const Generators& g);

/// Pairwise commutativity of quadratic elements for a fixed regular mu.
VerificationReport check_quadratic_commutativity(int n, int dmax, const Generators& g);
/// [QC_k, QC_l] on V_d for all 2 <= k < l <= n-1; vacuous for n <= 3.
VerificationReport check_qc_commutativity(int n, const Degree& d, const Generators& g,
                                          QcNormalization norm = QcNormalization::ShiftOfArgument);
/// QC_k at q = 0 equals tildeCas_k on every degree up to dmax.  Needs symbolic q.
VerificationReport check_qc_degeneration(int n, int dmax, const Generators& g);
/// The quadratic element at (mu(q), h_k(q)) reproduces the expanded correction
/// coefficients, and QC_k - 2 Q(mu, h_k) is the expected Cartan polynomial.
VerificationReport check_qc_cross(int n, int dmax, const Generators& g);
/// Curvature components C1 = [QC_k, QC_l] and
/// C2 = q_k dQC_l/dq_k - q_l dQC_k/dq_l; nonzero C2 is a finding.
VerificationReport check_flatness(int n, const Degree& d, const Generators& g,
                                  QcNormalization norm = QcNormalization::ShiftOfArgument);

/// Log-linear segment in the q-torus (coordinates q_2..q_{n-1}).
struct PathSegment {
  std::vector<std::complex<double>> from, to;
};

struct ConnectionSpec {
  int n = 3;
  Degree degree;
  double kappa = 0.5;
  exact::Assignment point;  // values of x_1..x_n and hbar
  QcNormalization norm = QcNormalization::ShiftOfArgument;
};

struct StepControl {
  double initial_step = 1e-2;
  double tolerance = 1e-10;
  std::size_t max_steps = 200000;
};

struct MonodromyResult {
  std::vector<std::vector<std::complex<double>>> matrix;
  /// Entrywise difference to a run at tolerance / 64.
  double error_estimate = 0.0;
  std::size_t steps = 0;

  nlohmann::json to_json() const;
};

struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parallel transport of the identity along the segments for
/// V' = -kappa sum_k QC_k(q) V dlog q_k.
MonodromyResult monodromy_transport(const ConnectionSpec& spec, const std::vector<PathSegment>& path,
                                    const StepControl& control = {});
/// {"segments": [{"from": [q...], "to": [q...]}]} with each q a number or [re, im].
std::vector<PathSegment> parse_path(const nlohmann::json& j);
/// Closed polygon through the points, first point repeated at the end.
std::vector<PathSegment> polygon(const std::vector<std::vector<std::complex<double>>>& points);
double max_distance(const std::vector<std::vector<std::complex<double>>>& a,
                    const std::vector<std::vector<std::complex<double>>>& b);
double distance_to_identity(const std::vector<std::vector<std::complex<double>>>& a);

}  // namespace vermalab
