#include <catch_amalgamated.hpp>

#include <cmath>

#include "simpson/claims.hpp"
#include "simpson/regions.hpp"

using namespace simpson;

namespace {

Point pt(Rational x, Rational y) { return {Scalar(std::move(x)), Scalar(std::move(y))}; }

/// Polar brute force for the disc: the radial factor is exact, the angular
/// integral uses the periodic trapezoid rule, which converges geometrically.
double disc_moment_polar(unsigned p, unsigned q) {
  const int m = 4096;
  double angular = 0.0;
  for (int k = 0; k < m; ++k) {
    const double t = 2.0 * M_PI * k / m;
    angular += std::pow(std::cos(t), p) * std::pow(std::sin(t), q);
  }
  angular *= 2.0 * M_PI / m;
  return angular / (p + q + 2);
}

}  // namespace

TEST_CASE("simplex and cube moments match iterated integration", "[regions][oracle]") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& alpha : monomials_up_to(n, 4)) {
      INFO("n=" << n << " alpha=" << alpha.label());
      REQUIRE(moment(Simplex{n}, alpha) == Scalar(claims::detail::iterated_moment(true, alpha)));
      REQUIRE(moment(Cube{n}, alpha) == Scalar(claims::detail::iterated_moment(false, alpha)));
    }
  }
}

TEST_CASE("closed-form spot values", "[regions]") {
  CHECK(volume(Simplex{3}) == Scalar(Rational(1, 6)));
  CHECK(moment(Simplex{2}, MultiIndex{1, 1}) == Scalar(Rational(1, 24)));
  CHECK(moment(Simplex{3}, MultiIndex{1, 1, 1}) == Scalar(Rational(1, 720)));
  CHECK(moment(Cube{2}, MultiIndex{4, 0}) == Scalar(Rational(1, 5)));
  CHECK(centroid(Simplex{3}) == Point(3, Scalar(Rational(1, 4))));
  CHECK_THROWS_AS(moment(Simplex{2}, MultiIndex{1, 1, 1}), DimensionMismatch);
}

TEST_CASE("disc moments match the polar oracle", "[regions][oracle]") {
  for (unsigned p = 0; p <= 6; ++p) {
    for (unsigned q = 0; p + q <= 6; ++q) {
      const Scalar m = moment(UnitDisc{}, MultiIndex{p, q});
      INFO("p=" << p << " q=" << q << " exact=" << m.to_string());
      CHECK(m.is_pi());
      CHECK(m.to_double() == Catch::Approx(disc_moment_polar(p, q)).margin(1e-13));
    }
  }
  CHECK(moment(UnitDisc{}, MultiIndex{4, 0}) == Scalar::pi(Rational(1, 8)));
  CHECK(moment(UnitDisc{}, MultiIndex{2, 2}) == Scalar::pi(Rational(1, 24)));
  CHECK(moment(UnitDisc{}, MultiIndex{3, 1}).is_zero());
  CHECK_THROWS_AS(vertices(UnitDisc{}), NoVertices);
}

TEST_CASE("polygon moments", "[regions]") {
  SECTION("standard triangle equals the 2-simplex") {
    for (const auto& alpha : monomials_up_to(2, 7))
      REQUIRE(moment(standard_triangle_polygon(), alpha) == moment(Simplex{2}, alpha));
  }
  SECTION("unit square polygon equals the 2-cube") {
    const Region sq = Polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    for (const auto& alpha : monomials_up_to(2, 6)) REQUIRE(moment(sq, alpha) == moment(Cube{2}, alpha));
  }
  SECTION("trapezoid") {
    const Region t = trapezoid_region();
    CHECK(volume(t) == Scalar(Rational(3, 2)));
    CHECK(moment(t, MultiIndex{1, 1}) == Scalar(Rational(17, 24)));
    CHECK(moment(t, MultiIndex{3, 0}) == Scalar(Rational(9, 20)));
    CHECK(centroid(t) == pt(Rational(5, 9), Rational(7, 9)));
  }
  SECTION("hexagon lives in Q(sqrt 3)") {
    const Region h = hexagon_region();
    CHECK(volume(h) == Scalar::quad(4, 2, 3));
    CHECK(moment(h, MultiIndex{2, 0}) == Scalar::quad(Rational(16, 3), 3, 3));
    CHECK(moment(h, MultiIndex{0, 2}) == Scalar::quad(Rational(4, 3), Rational(1, 3), 3));
    CHECK(centroid(h) == Point{Scalar(0), Scalar(0)});
  }
  SECTION("translated square, binomial check") {
    const Region sq = Polygon({pt(2, 3), pt(3, 3), pt(3, 4), pt(2, 4)});
    // integral of x^2 y over [2,3]x[3,4] = (19/3)(7/2)
    CHECK(moment(sq, MultiIndex{2, 1}) == Scalar(Rational(133, 6)));
  }
}

TEST_CASE("polygon validation and orientation", "[regions]") {
  const Polygon cw({pt(0, 0), pt(0, 1), pt(1, 0)});
  CHECK(cw.doubled_area().sign() > 0);
  CHECK(volume(Region(cw)) == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(Polygon({pt(0, 0), pt(1, 0)}), InvalidRegion);
  CHECK_THROWS_AS(Polygon({pt(0, 0), pt(1, 1), pt(2, 2)}), InvalidRegion);
  CHECK_THROWS_AS(Polygon({pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)}), InvalidRegion);
  CHECK_THROWS_AS(Polygon({pt(0, 0), pt(1, 0), pt(0, 0), pt(0, 1)}), InvalidRegion);
  CHECK_THROWS_AS(Region(Simplex{0}), InvalidRegion);
}

TEST_CASE("membership and boundary", "[regions]") {
  const Region tri = Simplex{2};
  CHECK(contains(tri, pt(Rational(1, 3), Rational(1, 3))));
  CHECK(contains(tri, pt(1, 0)));
  CHECK_FALSE(contains(tri, pt(Rational(2, 3), Rational(1, 2))));
  CHECK(on_boundary(tri, pt(Rational(1, 2), Rational(1, 2))));
  CHECK_FALSE(on_boundary(tri, pt(Rational(1, 4), Rational(1, 4))));
  const Region sq = Cube{2};
  CHECK(on_boundary(sq, pt(1, Rational(1, 3))));
  CHECK_FALSE(contains(sq, pt(Rational(-1, 100), Rational(1, 2))));
  CHECK(on_boundary(UnitDisc{}, pt(0, 1)));
  CHECK_FALSE(contains(UnitDisc{}, pt(1, 1)));
  const Region hex = hexagon_region();
  CHECK(on_boundary(hex, {Scalar::quad(1, 1, 3), Scalar(0)}));
  CHECK(contains(hex, {Scalar::quad(0, 1, 3), Scalar(0)}));
  CHECK_FALSE(contains(hex, {Scalar::quad(2, 1, 3), Scalar(0)}));
}

TEST_CASE("vertex enumeration order", "[regions]") {
  const auto v = vertices(Cube{2});
  REQUIRE(v.size() == 4);
  CHECK(v[1] == pt(0, 1));
  CHECK(v[2] == pt(1, 0));
  CHECK(vertices(Simplex{3}).size() == 4);
  CHECK(Region(Simplex{2}).describe() == "simplex:2");
  CHECK(Region(UnitDisc{}).describe() == "disc");
}
