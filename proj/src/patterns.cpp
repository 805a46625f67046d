#include "vermalab/patterns.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vermalab {

int total(const Degree& d) { return std::accumulate(d.begin(), d.end(), 0); }

bool is_nonnegative(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

std::string to_string(const Degree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

std::vector<Degree> degrees_up_to(int n, int max_total) {
  std::vector<Degree> out;
  Degree cur(static_cast<std::size_t>(n - 1), 0);
  for (int t = 0; t <= max_total; ++t) {
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
      if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    if (cur.empty()) {
      if (t == 0) out.push_back(cur);
      continue;
    }
    rec(0, t);
  }
  return out;
}

Pattern::Pattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1) throw std::invalid_argument("pattern row " + std::to_string(i + 1) + " has wrong length");
}

int Pattern::at(int i, int j) const {
  if (i == 0 || i == n()) return 0;
  if (i < 0 || i > n() || j < 1 || j > i) throw std::out_of_range("pattern index out of range");
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Pattern Pattern::with(int i, int j, int value) const {
  Pattern p = *this;
  p.rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)) = value;
  return p;
}

bool Pattern::is_valid() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (rows_[i][j] < 0) return false;
      if (j < i && rows_[i][j] > rows_[i - 1][j]) return false;
    }
  return true;
}

Degree Pattern::degree() const {
  Degree d;
  for (const auto& r : rows_) d.push_back(std::accumulate(r.begin(), r.end(), 0));
  return d;
}

std::vector<int> Pattern::flattened() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string Pattern::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ",";
    out += "[";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(rows_[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

std::vector<Pattern> enumerate_patterns(int n, const Degree& d) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (d.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("degree vector must have length n-1");
  std::vector<Pattern> out;
  if (!is_nonnegative(d)) return out;
  std::vector<std::vector<int>> rows;
  for (int i = 1; i < n; ++i) rows.emplace_back(static_cast<std::size_t>(i), 0);
  // Row i: entries j < i are bounded by the entry above; the last is whatever remains.
  std::function<void(int, int, int)> rec = [&](int i, int j, int left) {
    if (i == n) {
      out.emplace_back(rows);
      return;
    }
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (j == i) {
      row[static_cast<std::size_t>(j - 1)] = left;
      if (i + 1 < n) {
        rec(i + 1, 1, d[static_cast<std::size_t>(i)]);
      } else {
        rec(n, 0, 0);
      }
      return;
    }
    int bound = std::min(left, rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)]);
    for (int v = 0; v <= bound; ++v) {
      row[static_cast<std::size_t>(j - 1)] = v;
      rec(i, j + 1, left - v);
    }
  };
  rec(1, 1, d[0]);
  return out;
}

std::size_t pattern_index(const std::vector<Pattern>& basis, const Pattern& p) {
  auto it = std::lower_bound(basis.begin(), basis.end(), p);
  if (it == basis.end() || !(*it == p)) throw std::out_of_range("pattern not in basis: " + p.to_string());
  return static_cast<std::size_t>(it - basis.begin());
}

GTPattern gt_pattern(const Pattern& p, const Generators& g) {
  const int n = p.n();
  GTPattern out;
  for (int i = 1; i <= n; ++i) {
    std::vector<FieldElem> row;
    for (int j = 1; j <= i; ++j) row.push_back(g.lowest_weight(j) - FieldElem(static_cast<long>(i < n ? p.at(i, j) : 0)));
    out.rows.push_back(std::move(row));
  }
  return out;
}

Degree GlobalFixedPoint::degree() const {
  Degree a = p0.degree(), b = pinf.degree();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::string GlobalFixedPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i > 0 ? "," : "") + std::to_string(sigma[i]);
  return s + ")," + p0.to_string() + "," + pinf.to_string();
}

std::vector<GlobalFixedPoint> enumerate_global_fixed_points(int n, const Degree& d) {
  if (d.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("degree vector must have length n-1");
  std::vector<GlobalFixedPoint> out;
  if (!is_nonnegative(d)) return out;
  std::vector<std::pair<Pattern, Pattern>> splits;
  Degree d0(d.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == d.size()) {
      Degree dinf = d;
      for (std::size_t i = 0; i < d.size(); ++i) dinf[i] -= d0[i];
      for (const auto& a : enumerate_patterns(n, d0))
        for (const auto& b : enumerate_patterns(n, dinf)) splits.emplace_back(a, b);
      return;
    }
    for (int v = 0; v <= d[pos]; ++v) {
      d0[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(splits.begin(), splits.end());
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    for (const auto& [a, b] : splits) out.push_back({sigma, a, b});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace vermalab
