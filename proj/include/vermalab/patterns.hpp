#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "vermalab/generators.hpp"

namespace vermalab {

/// d = (d_1, ..., d_{n-1}).  Components may be negative only as a marker of an
/// empty weight space.
using Degree = std::vector<int>;

int total(const Degree& d);
bool is_nonnegative(const Degree& d);
std::string to_string(const Degree& d);
/// All nonnegative degree vectors of length n-1 with |d| <= max_total, in
/// increasing |d| then lexicographic order.
std::vector<Degree> degrees_up_to(int n, int max_total);

/// Entries d_{ij} for n-1 >= i >= j >= 1, weakly decreasing down each column.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::vector<int>> rows);

  int n() const { return static_cast<int>(rows_.size()) + 1; }
  /// d_{ij}; returns 0 for the boundary rows i = 0 and i = n.
  int at(int i, int j) const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Pattern with(int i, int j, int value) const;
  bool is_valid() const;
  Degree degree() const;
  std::vector<int> flattened() const;

  friend bool operator==(const Pattern& a, const Pattern& b) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.flattened() <=> b.flattened(); }

  /// [[d11],[d21,d22],...]
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// All patterns of degree d in lexicographic order of the flattened rows.
std::vector<Pattern> enumerate_patterns(int n, const Degree& d);
std::size_t pattern_index(const std::vector<Pattern>& basis, const Pattern& p);

/// lambda_{ij} for n >= i >= j >= 1.
struct GTPattern {
  std::vector<std::vector<FieldElem>> rows;  // rows[i-1][j-1]
  const FieldElem& at(int i, int j) const {
    return rows.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
  }
};

GTPattern gt_pattern(const Pattern& p, const Generators& g);

struct GlobalFixedPoint {
  std::vector<int> sigma;  // one-line notation, values 1..n
  Pattern p0;
  Pattern pinf;

  Degree degree() const;
  friend bool operator==(const GlobalFixedPoint& a, const GlobalFixedPoint& b) = default;
  friend auto operator<=>(const GlobalFixedPoint& a, const GlobalFixedPoint& b) {
    if (auto c = a.sigma <=> b.sigma; c != 0) return c;
    if (auto c = a.p0 <=> b.p0; c != 0) return c;
    return a.pinf <=> b.pinf;
  }
  std::string to_string() const;
};

/// Ordered by sigma (lexicographic one-line), then p0, then pinf.
std::vector<GlobalFixedPoint> enumerate_global_fixed_points(int n, const Degree& d);

}  // namespace vermalab
