#include <cmath>
#include <numbers>

#include "doctest.h"
#include "vermalab/shiftarg.hpp"

using namespace vermalab;

namespace {
FieldElem P(const char* s) { return FieldElem::parse(s); }

void no_failures(const VerificationReport& rep) {
  for (const auto& it : rep.items) {
    INFO(it.label << " " << it.witness.value_or(""));
    CHECK(it.status != Status::Fail);
  }
}

ConnectionSpec standard_spec(double kappa) {
  ConnectionSpec s;
  s.n = 3;
  s.degree = {1, 1};
  s.kappa = kappa;
  s.point = exact::Assignment::parse("x1=0,x2=1,x3=2,hbar=1");
  return s;
}

using C = std::complex<double>;
}  // namespace

TEST_CASE("correction coefficients") {
  Generators g3 = Generators::symbolic(3);
  CHECK(qc_coefficient(1, 2, 3, g3) == P("q2/(1 + q2)"));
  Generators g4 = Generators::symbolic(4);
  CHECK(qc_coefficient(1, 2, 3, g4) == P("q2/(q2 + 1)"));
  CHECK(qc_coefficient(1, 2, 4, g4) == P("q2*q3/(q2*q3 + q3 + 1)"));
  CHECK(qc_coefficient(1, 3, 4, g4) == P("q3*(q2 + 1)/(q2*q3 + q3 + 1)"));
  CHECK(qc_coefficient(2, 3, 4, g4) == P("q3/(q3 + 1)"));

  VermaModule v2(Generators::symbolic(2));
  CHECK_THROWS_WITH_AS(qc_block(v2, 2, {1}, QcNormalization::Printed), "no quantum parameters (Picard rank n-2 = 0)",
                       std::invalid_argument);
  VermaModule v4(g4);
  auto dec = qc_decomposition(v4, 2, {1, 1, 1}, QcNormalization::Printed);
  REQUIRE(dec.terms.size() == 2);
  CHECK(dec.terms[0].i == 1);
  CHECK(dec.terms[0].j == 3);
  CHECK(dec.terms[1].j == 4);
  auto doubled = qc_decomposition(v4, 2, {1, 1, 1}, QcNormalization::ShiftOfArgument);
  CHECK(doubled.terms[1].coeff == dec.terms[1].coeff * FieldElem(2L));
}

TEST_CASE("quadratic space elements") {
  Generators g = Generators::symbolic(3);
  VermaModule v(g);
  std::vector<FieldElem> mu = {FieldElem(5L), FieldElem(2L), FieldElem(-1L)};
  for (const auto& d : degrees_up_to(3, 2)) {
    SparseMatrix all(v.engine.dim(d), v.engine.dim(d));
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) all = all + v.engine.word({{i, j}, {j, i}}, d);
    CHECK(quadratic_space_block(v.engine, mu, mu, d) == all);
  }
  std::vector<FieldElem> bad = {FieldElem(1L), FieldElem(3L), FieldElem(1L)};
  CHECK_THROWS_WITH_AS(quadratic_space_block(v.engine, bad, mu, {1, 1}), "mu is not regular: <mu, alpha_13> = 0",
                       NonRegularWeight);
  no_failures(check_quadratic_commutativity(3, 2, g));
  CHECK(check_quadratic_commutativity(3, 2, g).ok());

  // mu(q) in coordinates for n = 3: (q2 + 1, 1, 0).
  auto m = mu_of_q(g);
  CHECK(m[0] == P("q2 + 1"));
  CHECK(m[1] == FieldElem(1L));
  CHECK(m[2].is_zero());
}

TEST_CASE("commutativity and degeneration") {
  Generators g4 = Generators::symbolic(4);
  CHECK(check_qc_commutativity(3, {1, 1}, Generators::symbolic(3)).items[0].status == Status::Vacuous);
  CHECK(check_qc_commutativity(4, {1, 1, 1}, g4).ok());
  CHECK(check_qc_commutativity(4, {1, 0, 1}, g4).ok());
  auto printed = check_qc_commutativity(4, {1, 1, 1}, g4, QcNormalization::Printed);
  CHECK(printed.items[0].status == Status::Finding);
  CHECK(check_qc_commutativity(4, {1, 1, 0}, g4, QcNormalization::Printed).items[0].status == Status::Pass);

  CHECK(check_qc_degeneration(3, 2, Generators::symbolic(3)).ok());
  CHECK(check_qc_degeneration(4, 2, g4).ok());
  no_failures(check_qc_cross(3, 2, Generators::symbolic(3)));
  CHECK(check_qc_cross(4, 2, g4).ok());
}

TEST_CASE("flatness") {
  CHECK(check_flatness(3, {1, 1}, Generators::symbolic(3)).items[0].status == Status::Vacuous);
  auto rep = check_flatness(4, {1, 1, 1}, Generators::symbolic(4));
  no_failures(rep);
  REQUIRE(rep.items.size() == 2);
  CHECK(rep.items[0].status == Status::Pass);
}

TEST_CASE("monodromy transport") {
  ConnectionSpec spec = standard_spec(0.5);
  StepControl fine;
  fine.tolerance = 1e-12;
  auto contractible = polygon({{C(2.0, 0.0)}, {C(2.5, 0.8)}, {C(3.0, 0.0)}, {C(2.5, -0.6)}});
  auto r = monodromy_transport(spec, contractible, fine);
  CHECK(distance_to_identity(r.matrix) < 1e-8);

  auto circle = polygon({{C(0.5, 0.0)}, {C(0.0, 0.5)}, {C(-0.5, 0.0)}, {C(0.0, -0.5)}});
  auto square = polygon({{C(0.3, 0.0)}, {C(0.3, 0.3)}, {C(0.0, 0.6)}, {C(-0.4, 0.4)}, {C(-0.4, -0.4)}, {C(0.2, -0.7)}});
  // Same base point: prepend a radial segment to the second loop and append its reverse.
  std::vector<PathSegment> b = {{{C(0.5, 0.0)}, {C(0.3, 0.0)}}};
  b.insert(b.end(), square.begin(), square.end());
  b.push_back({{C(0.3, 0.0)}, {C(0.5, 0.0)}});
  auto ma = monodromy_transport(spec, circle, fine);
  auto mb = monodromy_transport(spec, b, fine);
  CHECK(max_distance(ma.matrix, mb.matrix) < 1e-6);
  CHECK(ma.error_estimate < 1e-7);
  CHECK(monodromy_transport(spec, circle).error_estimate > ma.error_estimate);

  std::vector<PathSegment> there_and_back = circle;
  for (auto it = circle.rbegin(); it != circle.rend(); ++it) there_and_back.push_back({it->to, it->from});
  CHECK(distance_to_identity(monodromy_transport(spec, there_and_back, fine).matrix) < 1e-8);

  // Oracle: around q = 0 alone the eigenvalues are exp(-2 pi i kappa lambda) for
  // lambda in the spectrum {0, 2} of tildeCas_2 on V_(1,1).
  ConnectionSpec s3 = standard_spec(0.3);
  auto m = monodromy_transport(s3, circle).matrix;
  REQUIRE(m.size() == 2);
  C tr = m[0][0] + m[1][1];
  C det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  C e = std::exp(C(0.0, -2.0 * std::numbers::pi * 0.3 * 2.0));
  CHECK(std::abs(tr - (1.0 + e)) < 1e-7);
  CHECK(std::abs(det - e) < 1e-7);

  std::vector<PathSegment> through_pole = {{{C(-0.5, 0.0)}, {C(-2.0, 0.0)}}};
  CHECK_THROWS_AS(monodromy_transport(spec, through_pole), TransportError);

  auto parsed = parse_path(nlohmann::json::parse(R"({"segments": [{"from": [0.5], "to": [[0, 0.5]]}]})"));
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].to[0] == C(0.0, 0.5));
}
