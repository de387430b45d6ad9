#include <catch_amalgamated.hpp>

#include "simpson/exactness.hpp"

using namespace simpson;

namespace {

Point pt(Rational x, Rational y) { return {Scalar(std::move(x)), Scalar(std::move(y))}; }

std::vector<Point> trapezoid_nodes() {
  return {pt(Rational(5, 9), Rational(7, 9)), pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 2)};
}

/// y^T A = 0 and y^T b = inconsistency != 0.
void check_certificate(const Matrix& a, const std::vector<Scalar>& b, const Infeasible& f) {
  REQUIRE(f.certificate.size() == a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += f.certificate[i] * a(i, j);
    REQUIRE(s.is_zero());
  }
  Scalar s(0);
  for (std::size_t i = 0; i < a.rows(); ++i) s += f.certificate[i] * b[i];
  REQUIRE(s == f.inconsistency);
  REQUIRE_FALSE(s.is_zero());
}

}  // namespace

TEST_CASE("named rules reach exactly their certified degree", "[exactness]") {
  struct Case {
    CubatureRule rule;
    int degree;
  };
  std::vector<Case> cases{{cr4(), 3}, {cr5(), 2}, {cr5_conjugate(), 2}, {cr6(), 3}, {triangle_midedge(), 2}};
  for (unsigned n = 2; n <= 6; ++n) cases.push_back({cr1(n), 2});
  for (unsigned n = 2; n <= 5; ++n) cases.push_back({cr2(n), 2});
  for (unsigned n = 1; n <= 6; ++n) cases.push_back({cr3(n), 3});
  for (const auto& c : cases) {
    INFO(c.rule.label());
    const auto rep = exactness_degree(c.rule, c.degree + 2);
    CHECK(rep.degree == c.degree);
    REQUIRE(rep.failing.has_value());
    CHECK(rep.failing->degree() == static_cast<unsigned>(c.degree + 1));
  }
}

TEST_CASE("CR1 in one dimension is Simpson's rule and exact to degree 3", "[exactness]") {
  const auto rep = exactness_degree(cr1(1), 5);
  CHECK(rep.degree == 3);
  CHECK(*rep.failing == MultiIndex{4});
  CHECK(*rep.failing_residual == Scalar(Rational(1, 120)));
}

TEST_CASE("published residuals", "[exactness]") {
  for (unsigned n = 3; n <= 6; ++n) {
    std::vector<unsigned> e(n, 0);
    e[0] = e[1] = e[2] = 1;
    const Rational want = Rational(1) / (Rational(n + 1) * Rational(factorial(n + 2), BigInt(1))) -
                          Rational(1) / Rational(factorial(n + 3), BigInt(1));
    CHECK(residual(cr1(n), MultiIndex(e)) == Scalar(want));
  }
  CHECK(residual(cr3(3), MultiIndex{0, 0, 4}) == Scalar(Rational(1, 120)));
  CHECK(residual(cr5(), MultiIndex{3, 0}) == Scalar(Rational(336001, 762048)) - Scalar(Rational(9, 20)));
  CHECK(apply_monomial(cr5(), MultiIndex{3, 0}) == Scalar(Rational(336001, 762048)));
  CHECK(residual(cr4(), MultiIndex{3, 1}).is_zero());
  CHECK(residual(cr6(), MultiIndex{4, 0}) == Scalar::pi(Rational(1, 8)));
  const auto rep = exactness_degree(cr3(3), 5);
  CHECK(rep.failing->label() == "x1^4");
  CHECK(exactness_degree(midpoint_rule(Simplex{2}), 2).degree == 1);
}

TEST_CASE("solve_lambda recovers the blend parameters", "[exactness]") {
  for (unsigned n = 2; n <= 6; ++n) {
    const Region s = Simplex{n};
    const auto out = solve_lambda(midpoint_rule(s), vertex_rule(s), {MultiIndex::unit(n, 0) + MultiIndex::unit(n, 1)});
    REQUIRE(std::holds_alternative<UniqueSolution>(out));
    CHECK(std::get<UniqueSolution>(out).values[0] == Scalar(Rational(n + 1, n + 2)));
    const Region c = Cube{n};
    const auto oc = solve_lambda(midpoint_rule(c), vertex_rule(c), {MultiIndex::unit(n, 0, 2)});
    CHECK(std::get<UniqueSolution>(oc).values[0] == Scalar(Rational(2, 3)));
  }
  SECTION("the whole degree-2 system on the simplex agrees") {
    const auto out = solve_lambda(midpoint_rule(Simplex{3}), vertex_rule(Simplex{3}), degree_targets(3, 2));
    CHECK(std::get<UniqueSolution>(out).values[0] == Scalar(Rational(4, 5)));
  }
  SECTION("the disc: pi-scaled coefficients") {
    const Region d = UnitDisc{};
    const CubatureRule t = boundary_rule(d, {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)});
    const auto out = solve_lambda(midpoint_rule(d), t, degree_targets(2, 3));
    CHECK(std::get<UniqueSolution>(out).values[0] == Scalar(Rational(1, 2)));
    CHECK(same_rule(blend(Rational(1, 2), midpoint_rule(d), t), cr6()));
  }
  SECTION("linear targets are 0 = 0") {
    const auto out = solve_lambda(midpoint_rule(Simplex{2}), vertex_rule(Simplex{2}), degree_targets(2, 1));
    CHECK(std::holds_alternative<Underdetermined>(out));
  }
}

TEST_CASE("hexagon blend is infeasible with an honest witness", "[exactness]") {
  const Region hex = hexagon_region();
  const CubatureRule m = midpoint_rule(hex), t = vertex_rule(hex);
  const std::vector<MultiIndex> targets{MultiIndex{2, 0}, MultiIndex{0, 2}};
  const auto out = solve_lambda(m, t, targets);
  REQUIRE(std::holds_alternative<Infeasible>(out));
  const auto& f = std::get<Infeasible>(out);
  CHECK(f.rows == std::vector<std::size_t>{0, 1});
  // each cited equation alone has a solution, and they differ
  Matrix a(2, 1);
  std::vector<Scalar> b;
  for (std::size_t i = 0; i < 2; ++i) {
    const Scalar tv = apply_monomial(t, targets[i]);
    a(i, 0) = apply_monomial(m, targets[i]) - tv;
    b.push_back(moment(hex, targets[i]) - tv);
  }
  const Scalar from_x2 = b[0] / a(0, 0);
  const Scalar from_y2 = b[1] / a(1, 0);
  CHECK_FALSE(from_x2 == from_y2);
  CHECK(from_y2 == Scalar::quad(Rational(-1, 4), Rational(1, 2), 3));
  check_certificate(a, b, f);
}

TEST_CASE("mixing pi with rational coefficients is reported", "[exactness]") {
  const Region d = UnitDisc{};
  const CubatureRule t(d, {pt(0, 0)}, {Scalar(0)}, "zero");
  const CubatureRule fake(d, {pt(0, 0)}, {Scalar(3)}, "rational-weight");
  const auto out = solve_lambda(fake, t, degree_targets(2, 2));
  REQUIRE(std::holds_alternative<Infeasible>(out));
  CHECK(std::get<Infeasible>(out).description.find("NonRationalSystem") != std::string::npos);
}

TEST_CASE("solve_weights on the trapezoid", "[exactness]") {
  const Region trap = trapezoid_region();
  const auto nodes = trapezoid_nodes();
  SECTION("all degree-2 targets: infeasible with certificate") {
    const auto targets = degree_targets(2, 2);
    const auto out = solve_weights(trap, nodes, targets);
    REQUIRE(std::holds_alternative<Infeasible>(out));
    std::vector<Scalar> b;
    for (const auto& t : targets) b.push_back(moment(trap, t));
    check_certificate(weight_system(nodes, targets), b, std::get<Infeasible>(out));
  }
  SECTION("dropping xy") {
    const auto targets = degree_targets(2, 2, {MultiIndex{1, 1}});
    const auto out = solve_weights(trap, nodes, targets);
    REQUIRE(std::holds_alternative<UniqueSolution>(out));
    const auto& w = std::get<UniqueSolution>(out).values;
    CHECK(w == std::vector<Scalar>{Rational(81, 80), Rational(23, 240), Rational(17, 120), Rational(29, 240),
                                   Rational(31, 240)});
    const CubatureRule rule(trap, nodes, w, "trapezoid-weights");
    for (const auto& t : targets) REQUIRE(residual(rule, t).is_zero());
    CHECK_FALSE(residual(rule, MultiIndex{1, 1}).is_zero());
  }
  SECTION("nodes outside the region are rejected") {
    CHECK_THROWS_AS(solve_weights(trap, {pt(2, 2)}, degree_targets(2, 0)), NodeOutsideRegion);
  }
}

TEST_CASE("solve_weights reproduces CR1(2)", "[exactness]") {
  const Region s = Simplex{2};
  std::vector<Point> nodes{centroid(s)};
  for (const auto& v : vertices(s)) nodes.push_back(v);
  const auto out = solve_weights(s, nodes, degree_targets(2, 2));
  REQUIRE(std::holds_alternative<UniqueSolution>(out));
  CHECK(std::get<UniqueSolution>(out).values ==
        std::vector<Scalar>{Rational(3, 8), Rational(1, 24), Rational(1, 24), Rational(1, 24)});
}

TEST_CASE("linear algebra", "[exactness][linalg]") {
  const Matrix a{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(3)}};
  CHECK(determinant(a) == Scalar(5));
  const auto out = solve_linear(a, {Scalar(3), Scalar(4)});
  CHECK(std::get<UniqueSolution>(out).values == std::vector<Scalar>{Scalar(1), Scalar(1)});
  const Matrix s{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK(determinant(s).is_zero());
  CHECK(std::get<Underdetermined>(solve_linear(s, {Scalar(1), Scalar(2)})).nullity == 1);
  CHECK(std::holds_alternative<Infeasible>(solve_linear(s, {Scalar(1), Scalar(3)})));
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionMismatch);
}
