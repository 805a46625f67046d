#include "doctest.h"
#include "vermalab/verma.hpp"

using namespace vermalab;

namespace {
FieldElem P(const char* s) { return FieldElem::parse(s); }
}  // namespace

TEST_CASE("cartan scalars") {
  VermaModule v2(Generators::symbolic(2));
  for (int m = 0; m <= 3; ++m) {
    CHECK(v2.seeds->cartan_scalar(1, {m}) == P("x1/hbar") - FieldElem(static_cast<long>(m)));
    CHECK(v2.seeds->cartan_scalar(2, {m}) == P("x2/hbar + 1") + FieldElem(static_cast<long>(m)));
  }
  VermaModule v3(Generators::symbolic(3));
  CHECK(v3.seeds->cartan_scalar(2, {1, 1}) == P("x2/hbar + 1"));
}

TEST_CASE("rank two matrix coefficients") {
  VermaModule v(Generators::symbolic(2));
  for (int m = 0; m <= 4; ++m) {
    CHECK(v.engine.E(2, 1, {m}).get(0, 0) == P("-1/hbar"));
    if (m > 0) {
      FieldElem mm(static_cast<long>(m));
      CHECK(v.engine.E(1, 2, {m}).get(0, 0) == mm * (P("x2 - x1") + mm * P("hbar")));
    }
    // [e1, f1] acts on pattern m by hbar^{-1}(x2 - x1) + 2m + 1.
    SparseMatrix h = v.engine.commutator({2, 1}, {1, 2}, {m});
    CHECK(h.get(0, 0) == P("(x2 - x1)/hbar") + FieldElem(static_cast<long>(2 * m + 1)));
  }
}

TEST_CASE("E13 agrees with the block product oracle") {
  VermaModule v(Generators::symbolic(3));
  Degree src{1, 1};
  SparseMatrix e13 = v.engine.E(1, 3, src);
  // Direct products of seed blocks f_1 = E12 and f_2 = E23.
  SparseMatrix f2 = v.seeds->lower(2, src);
  SparseMatrix f1 = v.seeds->lower(1, src);
  SparseMatrix oracle = exact::multiply_serial(v.seeds->lower(1, {1, 0}), f2) - exact::multiply_serial(v.seeds->lower(2, {0, 1}), f1);
  CHECK(e13 == oracle);
  CHECK(e13.rows() == 1);
  CHECK(e13.cols() == 2);
  // No target of degree (-1, 0).
  SparseMatrix empty = v.engine.E(1, 3, {0, 1});
  CHECK(empty.rows() == 0);
  CHECK(empty.is_zero());
}

TEST_CASE("support rule and transposed transitions") {
  for (int n = 2; n <= 4; ++n) {
    VermaModule v(Generators::symbolic(n));
    for (const auto& d : degrees_up_to(n, 2))
      for (int i = 1; i < n; ++i) {
        Degree up = d;
        up[static_cast<std::size_t>(i - 1)] += 1;
        SparseMatrix e = v.seeds->raise(i, d);
        SparseMatrix f = v.seeds->lower(i, up);
        const auto& lo = v.seeds->basis(d);
        const auto& hi = v.seeds->basis(up);
        for (std::size_t r = 0; r < e.rows(); ++r)
          for (const auto& x : e.row(r)) {
            auto a = lo[x.col].flattened(), b = hi[r].flattened();
            int diffs = 0;
            for (std::size_t k = 0; k < a.size(); ++k) diffs += std::abs(a[k] - b[k]);
            CHECK(diffs == 1);
            CHECK(!f.get(x.col, r).is_zero());
          }
        CHECK(e.nnz() == f.nnz());
      }
  }
}

TEST_CASE("gl relations in small ranks") {
  CHECK(check_gl_relations(2, 3, Generators::symbolic(2)).ok());
  CHECK(check_gl_relations(3, 2, Generators::symbolic(3)).ok());
}

TEST_CASE("graded operators and windows") {
  VermaModule v(Generators::symbolic(3));
  auto window = degrees_up_to(3, 2);
  GradedOperator e12 = op_Eij(v, 1, 2, window);
  GradedOperator e21 = op_Eij(v, 2, 1, window);
  CHECK_THROWS_AS(e12.block({5, 0}), UnmaterializedBlock);
  auto inner = degrees_up_to(3, 1);
  GradedOperator lhs = commutator(e12, e21, inner);
  GradedOperator rhs = op_cartan(v, 1, inner) - op_cartan(v, 2, inner);
  for (const auto& d : inner) CHECK(lhs.block(d) == rhs.block(d));
  CHECK(materialize_serial(v.engine, 1, 3, window).to_json() == materialize_parallel(v.engine, 1, 3, window).to_json());
  CHECK(fixed_point_to_gt_scalar({1, 1}, v.generators()) == P("1/hbar^2"));
}
