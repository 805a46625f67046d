#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "vermalab/gtalg.hpp"

namespace vermalab {

struct WhittakerComponent {
  Degree degree;
  std::vector<Pattern> basis;
  std::vector<FieldElem> coefficients;

  nlohmann::json to_json() const;
};

/// Raised when the stacked system is inconsistent or has a kernel.
struct WhittakerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Components v_d of the vector with v_0 = 1 and f_i v = h^{-1} v, solved
/// degree by degree with memoization.
class WhittakerSolver {
 public:
  explicit WhittakerSolver(const VermaModule& v) : v_(v) {}

  const WhittakerComponent& component(const Degree& d);
  /// Rank deficiency of the stacked f-map on V_d (0 means uniqueness).
  std::size_t kernel_dimension(const Degree& d) const;
  /// Stacked f_i blocks (i ascending over valid d - e_i).
  SparseMatrix stacked_lowering(const Degree& d) const;

 private:
  const VermaModule& v_;
  std::mutex mu_;
  std::map<Degree, WhittakerComponent> memo_;
};

/// Uniqueness, recursion consistency, nonzero coefficients and separation of
/// the corrected Casimir spectrum on V_d.
VerificationReport check_cyclicity(int n, const Degree& d, const Generators& g);

/// Multiplication table of the algebra generated by the determinant-bundle
/// classes acting on V_d, over a monomial basis picked greedily in graded order.
struct RingTable {
  Degree degree;
  std::vector<std::string> generators;
  std::vector<std::string> basis;                     // monomials in the generators
  std::vector<std::vector<FieldElem>> eigenvalues;    // eigenvalues[basis element][pattern]
  struct Product {
    std::string lhs;
    std::vector<FieldElem> coefficients;  // over `basis`
  };
  std::vector<Product> products;

  nlohmann::json to_json() const;
};

/// Requires generators with constant values; throws std::invalid_argument when
/// the specialized spectrum no longer separates the basis.
RingTable ring_structure(int n, const Degree& d, const Generators& specialized);

/// Ring table plus checks that the expansions reproduce the eigenvalues and
/// that the table is commutative.  With symbolic generators only the
/// eigenvalue table is emitted.
VerificationReport check_ring(int n, const Degree& d, const Generators& g);

}  // namespace vermalab
