#include "doctest.h"
#include "vermalab/whittaker.hpp"

using namespace vermalab;

namespace {
FieldElem P(const char* s) { return FieldElem::parse(s); }
}  // namespace

TEST_CASE("whittaker components") {
  VermaModule v2(Generators::symbolic(2));
  WhittakerSolver s2(v2);
  CHECK(s2.component({0}).coefficients == std::vector<FieldElem>{FieldElem(1L)});
  CHECK(s2.component({1}).coefficients[0] == P("1/(hbar*(x2 - x1 + hbar))"));
  // Oracle for d = (2): solve the 1x1 system by hand from the f_1 entry 2(x2 - x1 + 2h).
  FieldElem expect = s2.component({1}).coefficients[0] / (P("hbar") * P("2*(x2 - x1 + 2*hbar)"));
  CHECK(s2.component({2}).coefficients[0] == expect);

  VermaModule v3(Generators::symbolic(3));
  WhittakerSolver s3(v3);
  CHECK(s3.component({1, 0}).coefficients[0] == P("1/(hbar*(x2 - x1 + hbar))"));
  CHECK(s3.component({1, 1}).coefficients.size() == 2);
}

TEST_CASE("cyclicity reports") {
  for (auto [n, d] : std::vector<std::pair<int, Degree>>{{2, {2}}, {3, {1, 1}}, {3, {2, 1}}, {4, {1, 1, 1}}}) {
    auto rep = check_cyclicity(n, d, Generators::symbolic(n));
    for (const auto& it : rep.items) {
      INFO(it.label << " " << it.witness.value_or(""));
      CHECK(it.status != Status::Fail);
    }
  }
}

TEST_CASE("ring structure under specialization") {
  auto at = exact::Assignment::parse("x1=0,x2=1,x3=2,hbar=1");
  Generators g = Generators::specialized(3, at);
  RingTable t = ring_structure(3, {1, 1}, g);
  REQUIRE(t.basis.size() == 2);
  CHECK(t.basis[1] == "c1(D_2)");
  REQUIRE(t.products.size() == 1);
  // Eigenvalues 0 and 1: c^2 = c.
  CHECK(t.products[0].coefficients == std::vector<FieldElem>{FieldElem(0L), FieldElem(1L)});
  CHECK(check_ring(3, {1, 1}, g).ok());

  RingTable one = ring_structure(2, {2}, Generators::specialized(2, exact::Assignment::parse("x1=0,x2=1,hbar=1")));
  CHECK(one.basis == std::vector<std::string>{"1"});

  // A point where both patterns share the eigenvalue.
  auto bad = exact::Assignment::parse("x1=1,x2=1,x3=2,hbar=1");
  CHECK_THROWS_AS(ring_structure(3, {1, 1}, Generators::specialized(3, bad)), std::invalid_argument);
}
