#include "doctest.h"
#include "vermalab/globalverma.hpp"

using namespace vermalab;

namespace {
FieldElem P(const char* s) { return FieldElem::parse(s); }
Pattern pat(std::vector<std::vector<int>> rows) { return Pattern(std::move(rows)); }

void all_pass(const VerificationReport& rep) {
  for (const auto& it : rep.items) {
    INFO(it.label << " " << it.witness.value_or(""));
    CHECK(it.status == Status::Pass);
  }
}
}  // namespace

TEST_CASE("permutations") {
  auto ps = permutations(3);
  CHECK(ps.size() == 6);
  CHECK(compose_perm({2, 1, 3}, {1, 3, 2}) == std::vector<int>{2, 3, 1});
  CHECK(permute_x(P("x1^2*hbar + x3"), {2, 3, 1}) == P("x2^2*hbar + x1"));
  Generators t = twisted(Generators::symbolic(2), {2, 1}, true);
  CHECK(t.x(1) == P("x2"));
  CHECK(t.hbar() == P("-hbar"));
}

TEST_CASE("global matrix coefficients") {
  GlobalModule m(Generators::symbolic(2));
  const auto& b0 = m.basis({0});
  REQUIRE(b0.size() == 2);
  const auto& b1 = m.basis({1});
  REQUIRE(b1.size() == 4);
  SparseMatrix e1 = m.e1.E(2, 1, {0});
  SparseMatrix e2 = m.e2.E(2, 1, {0});
  std::size_t src = global_index(b0, {{1, 2}, pat({{0}}), pat({{0}})});
  std::size_t t1 = global_index(b1, {{1, 2}, pat({{1}}), pat({{0}})});
  std::size_t t2 = global_index(b1, {{1, 2}, pat({{0}}), pat({{1}})});
  CHECK(e1.get(t1, src) == P("-1/hbar"));
  CHECK(e2.get(t2, src) == P("1/hbar"));
  CHECK(e1.get(t2, src).is_zero());
  // No entries between different permutations.
  std::size_t other = global_index(b1, {{2, 1}, pat({{1}}), pat({{0}})});
  CHECK(e1.get(other, src).is_zero());

  // Cartan eigenvalues of the two families under sigma = (12).
  SparseMatrix h1 = m.e1.E(1, 1, {1});
  SparseMatrix h2 = m.e2.E(1, 1, {1});
  std::size_t fp = global_index(b1, {{2, 1}, pat({{1}}), pat({{0}})});
  CHECK(h1.get(fp, fp) == P("x2/hbar - 1"));
  CHECK(h2.get(fp, fp) == P("-x2/hbar"));
}

TEST_CASE("double action") {
  all_pass(check_double_relations(2, 2, Generators::symbolic(2)));
  all_pass(check_double_relations(3, 1, Generators::symbolic(3)));
}

TEST_CASE("symmetric group action") {
  Generators g = Generators::symbolic(2);
  const auto basis = enumerate_global_fixed_points(2, {0});
  std::vector<FieldElem> v = {P("x1"), FieldElem()};
  auto moved = sn_action({2, 1}, v, basis);
  CHECK(moved[0].is_zero());
  CHECK(moved[1] == P("x2"));
  CHECK(sn_action({1, 2}, v, basis) == v);

  auto inv = symmetrize(2, {0});
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == std::vector<FieldElem>{FieldElem(1L), FieldElem(1L)});
  CHECK(symmetrize(2, {1}).size() == 2);
  all_pass(check_sn_action(2, 2, g));
  all_pass(check_sn_action(3, 1, Generators::symbolic(3)));
}

TEST_CASE("global whittaker vector") {
  GlobalModule m(Generators::symbolic(2));
  auto b = global_whittaker(m, {1});
  const auto& basis = m.basis({1});
  // Oracle: the local component at degree 1 and its bar.
  FieldElem v1 = P("1/(hbar*(x2 - x1 + hbar))");
  FieldElem v1bar = P("-1/(hbar*(x2 - x1 - hbar))");
  CHECK(b[global_index(basis, {{1, 2}, pat({{1}}), pat({{0}})})] == v1);
  CHECK(b[global_index(basis, {{1, 2}, pat({{0}}), pat({{1}})})] == v1bar);
  CHECK(b[global_index(basis, {{2, 1}, pat({{1}}), pat({{0}})})] == permute_x(v1, {2, 1}));
  all_pass(check_global_whittaker(2, {2}, Generators::symbolic(2)));
  all_pass(check_global_whittaker(3, {1, 1}, Generators::symbolic(3)));
}

TEST_CASE("global chern classes") {
  Generators g = Generators::symbolic(2);
  GlobalFixedPoint fp{{1, 2}, pat({{1}}), pat({{0}})};
  CHECK(eig_global_chern(fp, 1, 1, ChernPart::Diag, g) == P("-x1 + hbar/2"));
  CHECK(eig_global_chern(fp, 1, 1, ChernPart::Kunneth, g) == FieldElem(mpq_class(-1, 2)));
  GlobalFixedPoint zero{{1, 2}, pat({{0}}), pat({{0}})};
  CHECK(eig_global_c1(zero, 1, g) == P("-x1"));
  CHECK(eig_global_chern(zero, 1, 1, ChernPart::Diag, g) == P("-x1"));
  Generators g3 = Generators::symbolic(3);
  GlobalFixedPoint z3{{2, 3, 1}, pat({{0}, {0, 0}}), pat({{0}, {0, 0}})};
  CHECK(eig_global_c1(z3, 2, g3) == P("-x2 - x3"));

  auto r = cartan_from_chern(fp, 1, g);
  CHECK(r.value == P("x1 - 2*hbar"));
  CHECK_FALSE(r.consistent);
  CHECK(cartan_from_chern(zero, 2, g).consistent);

  auto rep = check_global_chern(2, {1}, g);
  REQUIRE(rep.items.size() == 3);
  CHECK(rep.items[0].status == Status::Finding);
  CHECK(rep.items[1].status == Status::Finding);
  CHECK(rep.items[2].status == Status::Pass);
  CHECK(check_global_chern(3, {1, 1}, g3).items[2].status == Status::Pass);
}
