#include <catch_amalgamated.hpp>

#include "simpson/exactness.hpp"

using namespace simpson;

namespace {

Point pt(Rational x, Rational y) { return {Scalar(std::move(x)), Scalar(std::move(y))}; }

Scalar weight_at(const CubatureRule& r, const Point& x) {
  Scalar w(0);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.nodes()[i] == x) w += r.weights()[i];
  return w;
}

}  // namespace

TEST_CASE("rule construction is validated", "[rules]") {
  CHECK_THROWS_AS(CubatureRule(Simplex{2}, {}, {}, "empty"), InvalidRule);
  CHECK_THROWS_AS(CubatureRule(Simplex{2}, {pt(0, 0)}, {Scalar(1), Scalar(2)}, "counts"), InvalidRule);
  CHECK_THROWS_AS(CubatureRule(Simplex{2}, {pt(1, 1)}, {Scalar(1)}, "outside"), NodeOutsideRegion);
  CHECK_THROWS_AS(CubatureRule(Simplex{2}, {{Scalar(0)}}, {Scalar(1)}, "dim"), DimensionMismatch);
  CHECK_THROWS_AS(boundary_rule(Simplex{2}, {pt(Rational(1, 4), Rational(1, 4))}), NodeNotOnBoundary);
  CHECK_THROWS_AS(blend(Scalar(1), midpoint_rule(Simplex{2}), vertex_rule(Cube{2})), RegionMismatch);
}

TEST_CASE("midpoint and vertex rules", "[rules]") {
  const CubatureRule m = midpoint_rule(Simplex{3});
  CHECK(m.size() == 1);
  CHECK(m.weight_sum() == Scalar(Rational(1, 6)));
  const CubatureRule t = vertex_rule(Cube{3});
  CHECK(t.size() == 8);
  CHECK(t.weights()[0] == Scalar(Rational(1, 8)));
  CHECK(exactness_degree(m, 3).degree == 1);
}

TEST_CASE("named rules have the published weights", "[rules]") {
  SECTION("CR1") {
    for (unsigned n = 1; n <= 6; ++n) {
      const CubatureRule r = cr1(n);
      const Rational nf(factorial(n), BigInt(1));
      CHECK(weight_at(r, centroid(Simplex{n})) == Scalar(Rational(n + 1) / (Rational(n + 2) * nf)));
      CHECK(weight_at(r, Point(n, Scalar(0))) == Scalar(Rational(1) / Rational(factorial(n + 2), BigInt(1))));
      CHECK(r.weight_sum() == volume(Simplex{n}));
    }
  }
  SECTION("CR1 is the lambda = (n+1)/(n+2) blend") {
    for (unsigned n = 1; n <= 5; ++n) {
      const Region s = Simplex{n};
      CHECK(same_rule(cr1(n), blend(Rational(n + 1, n + 2), midpoint_rule(s), vertex_rule(s))));
    }
  }
  SECTION("CR3 is the lambda = 2/3 blend and Simpson in one dimension") {
    for (unsigned n = 1; n <= 5; ++n) {
      const Region c = Cube{n};
      CHECK(same_rule(cr3(n), blend(Rational(2, 3), midpoint_rule(c), vertex_rule(c))));
    }
    const CubatureRule simpson(Cube{1}, {{Scalar(0)}, {Scalar(Rational(1, 2))}, {Scalar(1)}},
                               {Rational(1, 6), Rational(4, 6), Rational(1, 6)}, "Simpson");
    CHECK(same_rule(cr3(1), simpson));
  }
  SECTION("CR2 centroid weight") {
    CHECK(cr2(2).size() == 3);
    CHECK(weight_at(cr2(3), centroid(Simplex{3})) == Scalar(Rational(-2, 15)));
    CHECK(weight_at(cr2(3), Point{Scalar(0), Scalar(Rational(1, 3)), Scalar(Rational(1, 3))}) ==
          Scalar(Rational(9, 120)));
    CHECK(cr2(4).weight_sum() == volume(Simplex{4}));
    CHECK_THROWS(named_rule(RuleName::CR2, 1));
  }
  SECTION("CR4, CR6, midedge") {
    CHECK(weight_at(cr4(), pt(Rational(1, 2), Rational(1, 2))) == Scalar(Rational(1, 3)));
    CHECK(weight_at(cr4(), pt(1, Rational(1, 2))) == Scalar(Rational(1, 6)));
    CHECK(weight_at(cr6(), pt(0, 0)) == Scalar::pi(Rational(1, 2)));
    CHECK(weight_at(cr6(), pt(0, -1)) == Scalar::pi(Rational(1, 8)));
    CHECK(same_rule(triangle_midedge(), cr2(2)));
  }
  SECTION("CR5 and its conjugate") {
    const auto p = cr5_parameters();
    CHECK(p.lambda == Scalar(Rational(163, 392)));
    CHECK(p.d == Scalar::quad(Rational(11, 18), Rational(1, 458), kTrapezoidRadicand));
    const auto q = cr5_conjugate_parameters();
    CHECK(q.d == conj(p.d));
    CHECK(q.a == conj(p.a));
    CHECK(cr5().weight_sum() == Scalar(Rational(3, 2)));
    CHECK(cr5().size() == 5);
    CHECK_FALSE(same_rule(cr5(), cr5_conjugate()));
  }
}

TEST_CASE("blend drops zero weights and merges nothing else", "[rules]") {
  const Region tri = Simplex{2};
  const CubatureRule b0 = blend(Scalar(0), midpoint_rule(tri), vertex_rule(tri));
  CHECK(b0.size() == 3);
  const CubatureRule b1 = blend(Scalar(1), midpoint_rule(tri), vertex_rule(tri));
  CHECK(b1.size() == 1);
}

TEST_CASE("blend is affine in lambda", "[rules][property]") {
  const Region sq = Cube{2};
  const CubatureRule m = midpoint_rule(sq), t = vertex_rule(sq);
  const MonomialPoly p = pow(MonomialPoly::variable(2, 0) + MonomialPoly::variable(2, 1), 3);
  for (int k = -4; k <= 4; ++k) {
    const Rational lambda(k, 3);
    const Scalar lhs = apply_poly(blend(lambda, m, t), p);
    const Scalar rhs = Scalar(lambda) * apply_poly(m, p) + Scalar(Rational(1) - lambda) * apply_poly(t, p);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("same_rule is a multiset comparison", "[rules]") {
  const Region tri = Simplex{2};
  const CubatureRule a(tri, {pt(0, 0), pt(1, 0)}, {Scalar(1), Scalar(2)}, "a");
  const CubatureRule b(tri, {pt(1, 0), pt(0, 0)}, {Scalar(2), Scalar(1)}, "b");
  const CubatureRule c(tri, {pt(1, 0), pt(0, 0), pt(1, 0)}, {Scalar(1), Scalar(1), Scalar(1)}, "c");
  CHECK(same_rule(a, b));
  CHECK(same_rule(a, c));
  CHECK_FALSE(same_rule(a, midpoint_rule(tri)));
}

TEST_CASE("rule names", "[rules]") {
  CHECK(parse_rule_name("cr3") == RuleName::CR3);
  CHECK(parse_rule_name("TriangleMidedge") == RuleName::TriangleMidedge);
  CHECK(parse_rule_name("CR5-conjugate") == RuleName::CR5Conjugate);
  CHECK_FALSE(parse_rule_name("CR9").has_value());
  CHECK(claimed_degree(RuleName::CR6) == 3);
}

TEST_CASE("float application", "[rules]") {
  const RealFunction one = [](std::span<const double>) { return 1.0; };
  CHECK(apply_fn(cr6(), one) == Catch::Approx(M_PI));
  const RealFunction xy = [](std::span<const double> x) { return x[0] * x[1]; };
  CHECK(apply_fn(cr5(), xy) == Catch::Approx(17.0 / 24.0).epsilon(1e-13));
}
