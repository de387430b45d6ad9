#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "simpson/families.hpp"

using namespace simpson;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

std::vector<Rational> sorted_roots(const UnivariatePoly& p) {
  auto roots = rational_roots(p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Leibniz expansion, independent of the elimination code.
Scalar permutation_determinant(const Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Scalar total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("triangle system", "[families]") {
  CHECK(triangle_system(q(1, 2), q(1, 2), q(1, 2), q(0)).all_zero());
  // vertex placement (1,0), (0,0), (0,1) with CR1(2)'s lambda
  CHECK(triangle_system(q(1), q(0), q(0), q(3, 4)).all_zero());
  // with a = b = c = 0 two nodes coincide at the origin; x is not reproduced
  CHECK(triangle_system(q(0), q(0), q(0), q(3, 4)).at("x") == q(-1, 24));
  const auto r = triangle_system(q(1, 2), q(1, 2), q(1, 2), q(1, 2));
  CHECK(r.at("x*y") == q(1, 18) * q(1, 2) + q(1, 6) * q(1, 2) * q(1, 4) - q(1, 24));
  CHECK_FALSE(r.at("x*y").is_zero());
}

TEST_CASE("triangle family", "[families]") {
  SECTION("c = 1/2 is the midedge rule") {
    const auto check = verify_triangle_family(Rational(1, 2));
    CHECK(check.lambda == Rational(0));
    CHECK(check.solves);
    CHECK(same_rule(triangle_family_rule(Rational(1, 2)), triangle_midedge()));
  }
  SECTION("c = 0 is CR1(2)") {
    CHECK(verify_triangle_family(Rational(0)).lambda == Rational(3, 4));
    CHECK(same_rule(triangle_family_rule(Rational(0)), cr1(2)));
  }
  SECTION("c = 1/3 misses the extra x^2 condition") {
    const auto check = verify_triangle_family(Rational(1, 3));
    CHECK(check.solves);
    CHECK_FALSE(check.selector_holds);
    CHECK(check.selector_value == Rational(1, 54));
    CHECK_FALSE(check.printed_lambda_matches);
    // the printed 1 - lambda agrees with the basis polynomial only at c = 0 and c = 1/2
    CHECK_FALSE(check.printed_one_minus_lambda_matches);
    CHECK(verify_triangle_family(Rational(0)).printed_one_minus_lambda_matches);
    CHECK(verify_triangle_family(Rational(1, 2)).printed_one_minus_lambda_matches);
    const CubatureRule rule = triangle_family_rule(Rational(1, 3));
    CHECK(exactness_degree(rule, 3).degree == 2);
  }
  SECTION("selector roots are exactly {0, 1/2}") {
    CHECK(sorted_roots(triangle_selector_polynomial()) == std::vector<Rational>{Rational(0), Rational(1, 2)});
    CHECK(verify_triangle_family(Rational(0)).selector_holds);
    CHECK(verify_triangle_family(Rational(1, 2)).selector_holds);
  }
  SECTION("denominator zero") {
    // 12c^2 - 12c + 4 has no real root, so only a hand-built check can reach it
    CHECK(UnivariatePoly({Rational(4), Rational(-12), Rational(12)}).discriminant() < Rational(0));
  }
}

TEST_CASE("square system", "[families]") {
  CHECK(square_system(q(1, 2), q(1, 2), q(1, 2), q(1, 2), q(1, 3)).all_zero());
  CHECK(square_system(q(0), q(1), q(1), q(0), q(2, 3)).all_zero());
  const auto r = square_system(q(1, 2), q(1, 2), q(1, 2), q(1, 2), q(1, 2));
  CHECK(r.at("x^2") == q(1, 8) + q(1, 8) * (q(1, 4) + q(1, 4) + q(1)) - q(1, 3));
}

TEST_CASE("square family", "[families]") {
  CHECK(same_rule(square_family_rule(Rational(1, 2)), cr4()));
  CHECK(square_family_lambda(Rational(0)) == Rational(2, 3));
  CHECK(same_rule(square_family_rule(Rational(0)), cr3(2)));
  const auto quarter = verify_square_family(Rational(1, 4));
  CHECK(quarter.solves);
  CHECK_FALSE(quarter.x3y_residual.is_zero());
  CHECK(quarter.printed_x3y_matches);
  CHECK(sorted_roots(square_selector_polynomial()) == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
  SECTION("lambda never vanishes") {
    CHECK(square_lambda_numerator().discriminant() == Rational(36 - 48));
    CHECK(rational_roots(square_lambda_numerator()).empty());
  }
}

TEST_CASE("families are sound on random parameters", "[families][property]") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(0, 997), den(1, 997);
  for (int i = 0; i < 20; ++i) {
    long a = num(rng), b = den(rng);
    if (a > b) std::swap(a, b);
    const Rational t(a, b);
    INFO("parameter " << t.to_string());
    REQUIRE(verify_triangle_family(t).solves);
    const auto sq = verify_square_family(t);
    REQUIRE(sq.solves);
    REQUIRE(sq.printed_x3y_matches);
  }
}

TEST_CASE("trapezoid system", "[families]") {
  CHECK(trapezoid_system(cr5_parameters()).all_zero());
  CHECK(trapezoid_system(cr5_conjugate_parameters()).all_zero());
  CHECK(trapezoid_basis_residuals(cr5_parameters()).all_zero());
  CHECK(trapezoid_basis_residuals(cr5_conjugate_parameters()).all_zero());
  const Scalar d = Scalar::quad(Rational(11, 18), Rational(-1, 458), kTrapezoidRadicand);
  CHECK(cr5_conjugate_parameters().d == d);
  // lambda = 1 puts all weight on the centroid (5/9, 7/9)
  const auto r = trapezoid_system(q(0), q(0), q(0), q(0), q(1));
  CHECK(r.at("x").is_zero());
  CHECK(r.at("x*y") == q(35, 54) - q(17, 24));
}

TEST_CASE("3-simplex face system", "[families]") {
  FaceParameters third;
  third.fill(q(1, 3));
  CHECK(simplex3_face_system(third, q(-4, 5)).all_zero());
  CHECK(same_rule(simplex3_face_rule(third, q(-4, 5)), cr2(3)));
  FaceParameters bad = third;
  bad[0] = bad[1] = q(1, 2);
  CHECK_FALSE(simplex3_face_system(bad, q(-4, 5)).at("x").is_zero());

  const auto vertex = simplex3_vertex_solutions(q(4, 5));
  REQUIRE_FALSE(vertex.empty());
  for (const auto& p : vertex) {
    REQUIRE(simplex3_face_system(p, q(4, 5)).all_zero());
    CHECK(exactness_degree(simplex3_face_rule(p, q(4, 5)), 3).degree == 2);
  }
}

TEST_CASE("interpolation matrices", "[families]") {
  const Scalar h = q(1, 2);
  CHECK(interp_matrix_quadratic(h, h, h, h).det == q(1, 16));
  CHECK(interp_matrix_quadratic(q(1), q(0), q(0), q(1)).det.is_zero());
  const auto z = interp_matrix_quadratic(q(0), q(0), q(0), q(0));
  CHECK(z.det == permutation_determinant(z.matrix));
  const auto gen = interp_matrix_quadratic(q(2, 7), q(3, 5), q(1, 9), q(4, 11));
  CHECK(gen.det == permutation_determinant(gen.matrix));

  CHECK(interp_matrix_bilinear(h, h, h, h).det.is_zero());
  CHECK(interp_matrix_bilinear(q(1), q(0), q(0), q(1)).det.is_zero());
  CHECK(interp_matrix_bilinear(q(1), q(1), h, q(1, 3)).det == bilinear_det_closed_form(q(1), q(1), h, q(1, 3)));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = q(num(rng), den(rng)), b = q(num(rng), den(rng)), c = q(num(rng), den(rng)),
                 d = q(num(rng), den(rng));
    const auto m = interp_matrix_bilinear(a, b, c, d);
    REQUIRE(m.det == bilinear_det_closed_form(a, b, c, d));
    REQUIRE(m.det == permutation_determinant(m.matrix));
  }
}

TEST_CASE("interpolatory weights", "[families]") {
  SECTION("simplex centroid weight (n+1)^2/(n+2)!") {
    for (unsigned n = 2; n <= 5; ++n) {
      const Region s = Simplex{n};
      std::vector<Point> nodes = vertices(s);
      nodes.push_back(centroid(s));
      const Scalar w = interpolatory_weight(s, simplex_interpolation_basis(n), nodes, n + 1);
      CHECK(w == Scalar(Rational(BigInt((n + 1) * (n + 1)), factorial(n + 2))));
    }
  }
  SECTION("square center weight 1/3") {
    const Region sq = Cube{2};
    const Scalar h = q(1, 2);
    const std::vector<Point> nodes{{h, q(0)}, {q(0), h}, {h, q(1)}, {q(1), h}, {h, h}};
    const std::vector<MultiIndex> basis{MultiIndex{2, 0}, MultiIndex{0, 2}, MultiIndex{1, 0}, MultiIndex{0, 1},
                                        MultiIndex{0, 0}};
    CHECK(interpolatory_weight(sq, basis, nodes, 4) == q(1, 3));
    for (std::size_t i = 0; i < 4; ++i) CHECK(interpolatory_weight(sq, basis, nodes, i) == q(1, 6));
  }
  SECTION("bilinear at the midpoints is singular") {
    const Scalar h = q(1, 2);
    const std::vector<Point> nodes{{h, q(0)}, {q(0), h}, {q(1), h}, {h, q(1)}};
    const std::vector<MultiIndex> basis{MultiIndex{1, 1}, MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{0, 0}};
    CHECK_THROWS_AS(integrate_interpolant(Cube{2}, basis, nodes, {q(1), q(0), q(0), q(0)}), SingularInterpolation);
  }
}

TEST_CASE("interpolation reproduces rule weights", "[families][property]") {
  auto check_rule = [](const CubatureRule& rule, const std::vector<MultiIndex>& basis) {
    INFO(rule.label());
    for (std::size_t i = 0; i < rule.size(); ++i)
      CHECK(interpolatory_weight(rule.region(), basis, rule.nodes(), i) == rule.weights()[i]);
  };
  for (unsigned n = 2; n <= 4; ++n) check_rule(cr1(n), simplex_interpolation_basis(n));
  check_rule(triangle_midedge(), {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{0, 1}});
  check_rule(cr4(), {MultiIndex{2, 0}, MultiIndex{0, 2}, MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{0, 0}});
}

TEST_CASE("midpoint rule and linear interpolation", "[families][property]") {
  for (unsigned n = 1; n <= 4; ++n) {
    const Region s = Simplex{n};
    std::vector<MultiIndex> basis{MultiIndex::zero(n)};
    for (std::size_t k = 0; k < n; ++k) basis.push_back(MultiIndex::unit(n, k));
    MonomialPoly p = MonomialPoly::constant(n, Rational(3, 7));
    for (std::size_t k = 0; k < n; ++k) p += MonomialPoly::variable(n, k) * Rational(static_cast<long>(k) + 2, 5);
    const auto verts = vertices(s);
    std::vector<Scalar> data;
    for (const auto& v : verts) data.push_back(p.evaluate(v));
    const Scalar integral = integrate_interpolant(s, basis, verts, data);
    CHECK(integral == apply_poly(vertex_rule(s), p));
    CHECK(apply_poly(midpoint_rule(s), p) == integral);
  }
}
