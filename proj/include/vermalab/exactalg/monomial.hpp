#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "vermalab/exactalg/symbol.hpp"

namespace vermalab::exact {

/// Exponent vector over the fixed slot layout.  Ordered graded-lexicographically:
/// total degree first, then exponents compared from the highest slot down.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int slot, unsigned exponent = 1);

  unsigned exponent(int slot) const { return exps_[static_cast<std::size_t>(slot)]; }
  unsigned total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }

  /// Throws std::overflow_error when an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) == true from the divisor side.
  Monomial operator/(const Monomial& divisor) const;
  Monomial with_exponent(int slot, unsigned exponent) const;
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.total_ == b.total_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.total_ != b.total_) return a.total_ <=> b.total_;
    for (int s = kNumSlots - 1; s >= 0; --s) {
      auto i = static_cast<std::size_t>(s);
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kNumSlots> exps_{};
  std::uint16_t total_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace vermalab::exact
