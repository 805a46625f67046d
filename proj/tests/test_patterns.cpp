#include <algorithm>
#include <set>

#include "doctest.h"
#include "vermalab/patterns.hpp"

using namespace vermalab;

namespace {

// Every assignment of entries in [0, max d] filtered by the pattern rules.
std::vector<Pattern> naive_patterns(int n, const Degree& d) {
  int box = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  int entries = n * (n - 1) / 2;
  std::vector<int> flat(static_cast<std::size_t>(entries), 0);
  std::vector<Pattern> out;
  for (;;) {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int i = 1; i < n; ++i) {
      rows.emplace_back(flat.begin() + static_cast<long>(k), flat.begin() + static_cast<long>(k + static_cast<std::size_t>(i)));
      k += static_cast<std::size_t>(i);
    }
    Pattern p(rows);
    if (p.is_valid() && p.degree() == d) out.push_back(p);
    std::size_t pos = 0;
    while (pos < flat.size() && flat[pos] == box) flat[pos++] = 0;
    if (pos == flat.size()) break;
    ++flat[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t naive_global_count(int n, const Degree& d) {
  // Independent route: sum over all splits of |patterns(d0)| * |patterns(d - d0)|.
  std::size_t total = 0;
  std::vector<int> d0(d.size(), 0);
  for (;;) {
    Degree dinf = d;
    for (std::size_t i = 0; i < d.size(); ++i) dinf[i] -= d0[i];
    total += naive_patterns(n, d0).size() * naive_patterns(n, dinf).size();
    std::size_t pos = 0;
    while (pos < d0.size() && d0[pos] == d[pos]) d0[pos++] = 0;
    if (pos == d0.size()) break;
    ++d0[pos];
  }
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
  return total * fact;
}

}  // namespace

TEST_CASE("pattern examples") {
  auto p = enumerate_patterns(2, {3});
  REQUIRE(p.size() == 1);
  CHECK(p[0].at(1, 1) == 3);

  auto q = enumerate_patterns(3, {1, 1});
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Pattern({{1}, {0, 1}}));
  CHECK(q[1] == Pattern({{1}, {1, 0}}));

  auto r = enumerate_patterns(3, {0, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Pattern({{0}, {0, 1}}));
  CHECK(r[0].to_string() == "[[0],[0,1]]");
}

TEST_CASE("enumeration matches the naive filter") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& d : degrees_up_to(n, 4)) {
      auto fast = enumerate_patterns(n, d);
      CHECK(fast == naive_patterns(n, d));
      CHECK(std::set<Pattern>(fast.begin(), fast.end()).size() == fast.size());
      for (const auto& p : fast) CHECK(p.degree() == d);
    }
}

TEST_CASE("reversal symmetry of dimensions for n = 3") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) CHECK(enumerate_patterns(3, {a, b}).size() == enumerate_patterns(3, {b, a}).size());
}

TEST_CASE("gt patterns") {
  Generators g = Generators::symbolic(3);
  GTPattern gt = gt_pattern(Pattern({{1}, {0, 1}}), g);
  CHECK(gt.at(2, 2) == FieldElem::parse("x2/hbar"));
  CHECK(gt.at(3, 3) == FieldElem::parse("x3/hbar + 2"));
  Generators g2 = Generators::symbolic(2);
  GTPattern m = gt_pattern(Pattern(std::vector<std::vector<int>>{{5}}), g2);
  CHECK(m.at(1, 1) == FieldElem::parse("x1/hbar - 5"));
  CHECK(m.at(2, 2) == FieldElem::parse("x2/hbar + 1"));
}

TEST_CASE("global fixed points") {
  auto pts = enumerate_global_fixed_points(2, {1});
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].sigma == std::vector<int>{1, 2});
  CHECK(pts[0].p0 == Pattern(std::vector<std::vector<int>>{{0}}));
  CHECK(pts[0].pinf == Pattern(std::vector<std::vector<int>>{{1}}));
  CHECK(pts[3].sigma == std::vector<int>{2, 1});
  CHECK(enumerate_global_fixed_points(2, {0}).size() == 2);
  for (int n = 2; n <= 3; ++n)
    for (const auto& d : degrees_up_to(n, 3)) {
      auto g = enumerate_global_fixed_points(n, d);
      CHECK(g.size() == naive_global_count(n, d));
      CHECK(std::is_sorted(g.begin(), g.end()));
      for (const auto& x : g) CHECK(x.degree() == d);
    }
}
