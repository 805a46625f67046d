#include "doctest.h"
#include "vermalab/gtalg.hpp"

using namespace vermalab;

namespace {
FieldElem P(const char* s) { return FieldElem::parse(s); }
Pattern pat(std::vector<std::vector<int>> rows) { return Pattern(std::move(rows)); }
}  // namespace

TEST_CASE("casimir examples") {
  Generators g = Generators::symbolic(2);
  VermaModule v(g);
  for (int m = 0; m <= 3; ++m) {
    FieldElem s = P("x1/hbar") - FieldElem(static_cast<long>(m));
    CHECK(casimir_block(v.engine, 1, {m}).get(0, 0) == s * s);
  }
  FieldElem l1 = P("x1/hbar"), l2 = P("x2/hbar + 1");
  // E12 E21 v = [E12, E21] v = (E11 - E22) v on the lowest vector.
  CHECK(casimir_block(v.engine, 2, {0}).get(0, 0) == l1 * l1 + l2 * l2 + l1 - l2);

  VermaModule v3(Generators::symbolic(3));
  SparseMatrix c2 = casimir_block(v3.engine, 2, {1, 1});
  CHECK(c2.is_diagonal());
}

TEST_CASE("closed forms") {
  Generators g = Generators::symbolic(3);
  Pattern zero = pat({{0}, {0, 0}});
  CHECK(eig_tilde_casimir(zero, 2, g) == P("2*(x1 + x2)/hbar"));
  Pattern p = pat({{1}, {1, 0}});
  CHECK(eig_tilde_casimir(p, 2, g) == P("2*x2/hbar"));
  CHECK(eig_det_bundle(zero, 2, g) == P("x1 + x2"));
  CHECK(eig_det_bundle(p, 2, g) == P("x2"));

  Generators g2 = Generators::symbolic(2);
  for (int m = 0; m <= 3; ++m) {
    Pattern q = pat({{m}});
    FieldElem mm(static_cast<long>(m));
    CHECK(eig_chern(q, 1, 1, ChernPart::Diag, g2) == P("-x1") + mm * P("hbar/2"));
    CHECK(eig_chern(q, 1, 1, ChernPart::Kunneth, g2) == -mm * FieldElem(mpq_class(1, 2)));
  }
}

TEST_CASE("assembled operators match closed forms") {
  for (int n = 2; n <= 3; ++n) {
    auto rep = check_casimirs(n, n == 2 ? 3 : 2, Generators::symbolic(n));
    for (const auto& it : rep.items) {
      INFO(it.label << " " << it.witness.value_or(""));
      CHECK(it.status == Status::Pass);
    }
  }
}

TEST_CASE("spectrum separation") {
  Generators g = Generators::symbolic(3);
  auto js = joint_spectrum(3, {1, 1}, GeneratorSet::TildeCasimir, g);
  REQUIRE(js.table.size() == 2);
  CHECK(js.table[0][0] == P("2*x1/hbar"));
  CHECK(js.table[1][0] == P("2*x2/hbar"));
  CHECK(check_spectrum_separation(3, {1, 1}, GeneratorSet::TildeCasimir, g).ok());
  auto vac = check_spectrum_separation(2, {3}, GeneratorSet::TildeCasimir, Generators::symbolic(2));
  CHECK(vac.items[0].status == Status::Vacuous);
  CHECK(check_spectrum_separation(3, {2, 1}, GeneratorSet::Casimir, g, {2}).ok());
  auto basis = joint_spectrum(3, {1, 1}, GeneratorSet::DetBundlesBasis, g);
  CHECK(basis.labels == std::vector<std::string>{"c1(D_2)"});
  CHECK(joint_spectrum(3, {1, 0}, GeneratorSet::DetBundlesBasis, g).labels.empty());
}
