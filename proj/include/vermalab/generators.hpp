#pragma once

#include <random>
#include <vector>

#include "vermalab/exactalg/field_elem.hpp"

namespace vermalab {

using exact::FieldElem;

/// Values used for x_1..x_n, hbar and q_2..q_{n-1} when building operators.
/// Symbolic by default; specialized or random constants otherwise.
struct Generators {
  int n = 2;
  std::vector<FieldElem> xs;  // x_1..x_n
  FieldElem h;
  std::vector<FieldElem> qs;  // q_2..q_{n-1}

  static Generators symbolic(int n);
  /// Substitutes the assigned symbols and keeps the others symbolic.
  static Generators specialized(int n, const exact::Assignment& at);
  /// Independent integers from [-10^4, 10^4]; hbar is redrawn until nonzero.
  static Generators random(int n, std::mt19937_64& rng);

  const FieldElem& x(int i) const { return xs.at(static_cast<std::size_t>(i - 1)); }
  const FieldElem& hbar() const { return h; }
  /// q_l for 2 <= l <= n-1, and q_n = 1.
  FieldElem q(int l) const;
  /// The lowest weight hbar^{-1} x_i + i - 1.
  FieldElem lowest_weight(int i) const;
  bool is_symbolic() const;
};

}  // namespace vermalab
