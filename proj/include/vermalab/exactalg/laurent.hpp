#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vermalab::exact {

/// t1^a1 ... tn^an v^b with integer exponents.
struct LaurentMonomial {
  std::vector<std::int64_t> t;
  std::int64_t v = 0;

  static LaurentMonomial one(int n) { return {std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), 0}; }
  static LaurentMonomial t_var(int n, int i, std::int64_t e = 1);
  static LaurentMonomial v_pow(int n, std::int64_t e);

  bool is_one() const;
  LaurentMonomial inverse() const;
  LaurentMonomial pow(std::int64_t e) const;
  friend LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b);
  friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b) = default;
  friend auto operator<=>(const LaurentMonomial& a, const LaurentMonomial& b) = default;

  /// "t1^a1 t2^a2 v^b", omitting zero exponents; "1" for the unit.
  std::string to_string() const;
};

/// Integer quadratic polynomial in formal symbols tau_1..tau_n standing for
/// the exponent of v, with t_j = v^{tau_j}.
class ExponentQuadratic {
 public:
  explicit ExponentQuadratic(int n = 0) : linear_(static_cast<std::size_t>(n), 0) {}
  static ExponentQuadratic constant(int n, std::int64_t c);
  static ExponentQuadratic tau(int n, int j);
  static ExponentQuadratic from_monomial(const LaurentMonomial& m);

  int rank() const { return static_cast<int>(linear_.size()); }
  std::int64_t constant_part() const { return constant_; }
  std::int64_t linear_coeff(int j) const { return linear_.at(static_cast<std::size_t>(j - 1)); }
  /// Coefficient of tau_i tau_j (i <= j stored canonically).
  std::int64_t quadratic_coeff(int i, int j) const;
  bool quadratic_zero() const { return quadratic_.empty(); }

  ExponentQuadratic operator-() const;
  friend ExponentQuadratic operator+(const ExponentQuadratic& a, const ExponentQuadratic& b);
  friend ExponentQuadratic operator-(const ExponentQuadratic& a, const ExponentQuadratic& b);
  ExponentQuadratic scaled(std::int64_t c) const;
  /// Product of two polynomials whose total degree is at most 2.
  friend ExponentQuadratic operator*(const ExponentQuadratic& a, const ExponentQuadratic& b);
  friend bool operator==(const ExponentQuadratic& a, const ExponentQuadratic& b) = default;

  /// The Laurent monomial v^{this} when the quadratic part vanishes.
  std::optional<LaurentMonomial> as_monomial() const;
  std::string to_string() const;

 private:
  std::int64_t constant_ = 0;
  std::vector<std::int64_t> linear_;
  std::map<std::pair<int, int>, std::int64_t> quadratic_;
};

}  // namespace vermalab::exact
