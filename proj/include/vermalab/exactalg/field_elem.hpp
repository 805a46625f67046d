#pragma once

#include <gmpxx.h>

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vermalab/exactalg/polynomial.hpp"
#include "vermalab/exactalg/symbol.hpp"

namespace vermalab::exact {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in rational function field") {}
};

/// Raised when a denominator vanishes at an evaluation point.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& den)
      : std::domain_error("pole: denominator " + den + " vanishes at the point") {}
};

/// Values for some subset of the field generators.
class Assignment {
 public:
  Assignment& set(Symbol s, const mpq_class& v) {
    values_[static_cast<std::size_t>(s.slot())] = v;
    return *this;
  }
  const std::optional<mpq_class>& get(int slot) const { return values_[static_cast<std::size_t>(slot)]; }
  bool covers(std::uint32_t mask) const;
  /// Parses "x1=0,x2=1/2,hbar=1".
  static Assignment parse(std::string_view text);

 private:
  std::array<std::optional<mpq_class>, kNumSlots> values_{};
};

/// Element of Q(x1..xn, hbar, q2..): num/den over Z with gcd(num, den) = 1
/// (integer content included) and den's leading coefficient positive.
/// Immutable and cheap to copy.
class FieldElem {
 public:
  FieldElem();
  FieldElem(long c);               // NOLINT(google-explicit-constructor)
  FieldElem(const mpz_class& c);   // NOLINT(google-explicit-constructor)
  FieldElem(const mpq_class& c);   // NOLINT(google-explicit-constructor)
  explicit FieldElem(const IntPoly& p);
  explicit FieldElem(const MultiPoly& p);

  static FieldElem symbol(Symbol s);
  static FieldElem x(int i) { return symbol(Symbol::x(i)); }
  static FieldElem hbar() { return symbol(Symbol::hbar()); }
  static FieldElem q(int l) { return symbol(Symbol::q(l)); }
  /// Normalizes an arbitrary fraction; throws DivisionByZero when den = 0.
  static FieldElem fraction(const IntPoly& num, const IntPoly& den);
  static FieldElem fraction(const MultiPoly& num, const MultiPoly& den);
  /// Parses expressions such as "(x2 - x1 + hbar)/hbar^2" or "-3/4".
  static FieldElem parse(std::string_view text);

  const IntPoly& num() const { return rep_->num; }
  const IntPoly& den() const { return rep_->den; }

  bool is_zero() const { return rep_->num.is_zero(); }
  bool is_one() const { return rep_->num.is_one() && rep_->den.is_one(); }
  bool is_constant() const { return rep_->num.is_constant() && rep_->den.is_constant(); }
  /// Requires is_constant().
  mpq_class constant_value() const;
  std::uint32_t slot_mask() const { return rep_->num.slot_mask() | rep_->den.slot_mask(); }

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
  FieldElem inverse() const;
  FieldElem pow(int e) const;
  /// Partial derivative with respect to the generator in `slot`.
  FieldElem derivative(int slot) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Exact value; throws std::invalid_argument if a variable is unassigned and
  /// PoleError if the denominator vanishes.
  mpq_class evaluate(const Assignment& at) const;
  /// Substitutes the assigned generators and keeps the rest symbolic.
  FieldElem substitute(const Assignment& at) const;

  /// "num" when den = 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Rep {
    IntPoly num;
    IntPoly den;
  };
  explicit FieldElem(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  static FieldElem canonical(IntPoly num, IntPoly den);
  std::shared_ptr<const Rep> rep_;
};

/// Sum with terms grouped by equal denominators.
FieldElem sum(const std::vector<FieldElem>& terms);

}  // namespace vermalab::exact
