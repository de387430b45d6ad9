#pragma once

// Parameterized boundary-node systems (triangle, square, trapezoid, 3-simplex
// faces) as residual evaluators, checks of their published solution families,
// and the interpolation identities behind the rules.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "simpson/exactness.hpp"
#include "simpson/linalg.hpp"
#include "simpson/univariate.hpp"

namespace simpson {

/// Named residuals L(f) - I(f) of a parameterized system.
struct SystemResiduals {
  std::vector<std::string> names;
  std::vector<Scalar> residuals;

  void add(std::string name, Scalar r) {
    names.push_back(std::move(name));
    residuals.push_back(std::move(r));
  }
  bool all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Scalar& r) { return r.is_zero(); });
  }
  const Scalar& at(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return residuals[i];
    throw std::out_of_range("no residual named " + name);
  }
};

// ---------------------------------------------------------------------------
// Triangle: nodes (a,0), (0,b), (c,1-c), centroid (1/3,1/3).

inline SystemResiduals triangle_system(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& lambda) {
  const Scalar mu = Scalar(1) - lambda;
  const Scalar one_c = Scalar(1) - c;
  const Scalar sixth = Rational(1, 6);
  const Scalar eighteenth = Rational(1, 18);
  SystemResiduals out;
  out.add("x", sixth * lambda + sixth * mu * (a + c) - Scalar(sixth));
  out.add("y", sixth * lambda + sixth * mu * (b + one_c) - Scalar(sixth));
  out.add("x^2", eighteenth * lambda + sixth * mu * (a * a + c * c) - Scalar(Rational(1, 12)));
  out.add("y^2", eighteenth * lambda + sixth * mu * (b * b + one_c * one_c) - Scalar(Rational(1, 12)));
  out.add("x*y", eighteenth * lambda + sixth * mu * c * one_c - Scalar(Rational(1, 24)));
  return out;
}

/// lambda(c) from the basis polynomial -12c^2+12 lambda c^2+4 lambda-3+12c-12 lambda c.
inline Rational triangle_family_lambda(const Rational& c) {
  const Rational den = Rational(12) * c * c - Rational(12) * c + Rational(4);
  if (den.is_zero()) throw DenominatorZero("triangle family lambda denominator vanishes");
  return (Rational(12) * c * c - Rational(12) * c + Rational(3)) / den;
}

/// lambda as printed: (12c^2+3-12c)/(-12c^2+4-12c).
inline Rational triangle_printed_lambda(const Rational& c) {
  const Rational den = Rational(-12) * c * c + Rational(4) - Rational(12) * c;
  if (den.is_zero()) throw DenominatorZero("printed lambda denominator -12c^2+4-12c vanishes");
  return (Rational(12) * c * c + Rational(3) - Rational(12) * c) / den;
}

/// 1 - lambda as printed: (1/4)(24c^2-1)/(3c^2-1+3c).
inline Rational triangle_printed_one_minus_lambda(const Rational& c) {
  const Rational den = Rational(3) * c * c - Rational(1) + Rational(3) * c;
  if (den.is_zero()) throw DenominatorZero("printed 1-lambda denominator vanishes");
  return Rational(1, 4) * (Rational(24) * c * c - Rational(1)) / den;
}

/// Numerator of the printed selector L(x^2) - 1/12, i.e.
/// (9c^2-1+3c-24c^3+24c^4) - (3c^2-1+3c), scaled by 12(3c^2-1+3c).
inline UnivariatePoly triangle_selector_polynomial() {
  const UnivariatePoly lhs{Rational(-1), Rational(3), Rational(9), Rational(-24), Rational(24)};
  const UnivariatePoly den{Rational(-1), Rational(3), Rational(3)};
  return lhs - den;
}

struct TriangleFamilyCheck {
  Rational c;
  Rational lambda;             // from the basis polynomial
  SystemResiduals residuals;   // all five, at a=1-c, b=c
  bool solves = false;
  Rational printed_lambda;
  bool printed_lambda_matches = false;
  bool printed_one_minus_lambda_matches = false;
  Rational selector_value;     // printed L(x^2) expression minus 1/12
  bool selector_holds = false;
};

inline TriangleFamilyCheck verify_triangle_family(const Rational& c) {
  TriangleFamilyCheck out;
  out.c = c;
  out.lambda = triangle_family_lambda(c);
  out.residuals = triangle_system(Rational(1) - c, c, c, out.lambda);
  out.solves = out.residuals.all_zero();
  out.printed_lambda = triangle_printed_lambda(c);
  out.printed_lambda_matches = out.printed_lambda == out.lambda;
  out.printed_one_minus_lambda_matches = triangle_printed_one_minus_lambda(c) == Rational(1) - out.lambda;
  const Rational den = Rational(3) * c * c - Rational(1) + Rational(3) * c;
  const UnivariatePoly printed_l{Rational(-1), Rational(3), Rational(9), Rational(-24), Rational(24)};
  out.selector_value = Rational(1, 12) * printed_l(c) / den - Rational(1, 12);
  out.selector_holds = out.selector_value.is_zero();
  return out;
}

/// The rule of a triangle family member: lambda-blend of the centroid and
/// the boundary nodes (1-c,0), (0,c), (c,1-c).
inline CubatureRule triangle_family_rule(const Rational& c) {
  const Region r = Simplex{2};
  const Scalar cc = c;
  const Scalar one_c = Scalar(1) - cc;
  auto t = boundary_rule(r, {{one_c, Scalar(0)}, {Scalar(0), cc}, {cc, one_c}});
  return blend(triangle_family_lambda(c), midpoint_rule(r), t).relabeled("triangle-family(c=" + c.to_string() + ")");
}

// ---------------------------------------------------------------------------
// Square: nodes (a,0), (0,b), (c,1), (1,d), centre (1/2,1/2).

inline SystemResiduals square_system(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                                     const Scalar& lambda) {
  const Scalar mu = Scalar(1) - lambda;
  const Scalar q = Scalar(Rational(1, 4)) * mu;
  const Scalar half = Rational(1, 2);
  const Scalar quarter = Rational(1, 4);
  const Scalar eighth = Rational(1, 8);
  const Scalar one(1);
  SystemResiduals out;
  out.add("x", half * lambda + q * (a + c + one) - half);
  out.add("y", half * lambda + q * (b + one + d) - half);
  out.add("x^2", quarter * lambda + q * (a * a + c * c + one) - Scalar(Rational(1, 3)));
  out.add("y^2", quarter * lambda + q * (b * b + one + d * d) - Scalar(Rational(1, 3)));
  out.add("x*y", quarter * lambda + q * (c + d) - quarter);
  out.add("x^3", eighth * lambda + q * (a * a * a + c * c * c + one) - quarter);
  out.add("y^3", eighth * lambda + q * (b * b * b + one + d * d * d) - quarter);
  out.add("x^2*y", eighth * lambda + q * (c * c + d) - Scalar(Rational(1, 6)));
  out.add("x*y^2", eighth * lambda + q * (c + d * d) - Scalar(Rational(1, 6)));
  return out;
}

inline Rational square_family_lambda(const Rational& d) {
  const Rational den = Rational(6) * d * d - Rational(6) * d + Rational(3);
  if (den.is_zero()) throw DenominatorZero("square family lambda denominator vanishes");
  return (Rational(6) * d * d - Rational(6) * d + Rational(2)) / den;
}

/// 6d^2 - 6d + 2, the numerator of lambda(d).
inline UnivariatePoly square_lambda_numerator() { return {Rational(2), Rational(-6), Rational(6)}; }

/// Printed L(x^3 y) on the family: -(1/24)(-9d^2+7d-3+2d^3)/(2d^2-2d+1).
inline Rational square_printed_x3y(const Rational& d) {
  const UnivariatePoly num{Rational(-3), Rational(7), Rational(-9), Rational(2)};
  const Rational den = Rational(2) * d * d - Rational(2) * d + Rational(1);
  return Rational(-1, 24) * num(d) / den;
}

/// Numerator of printed L(x^3 y) - 1/8 after clearing 24(2d^2-2d+1).
inline UnivariatePoly square_selector_polynomial() {
  const UnivariatePoly num{Rational(-3), Rational(7), Rational(-9), Rational(2)};
  const UnivariatePoly den{Rational(1), Rational(-2), Rational(2)};
  return num * Rational(-1) - den * Rational(3);
}

struct SquareFamilyCheck {
  Rational d;
  Rational lambda;
  SystemResiduals residuals;  // all nine, at a=d, b=c=1-d
  bool solves = false;
  Scalar x3y_residual;        // L(x^3 y) - 1/8 on the family member
  bool printed_x3y_matches = false;
};

inline CubatureRule square_family_rule(const Rational& d) {
  const Region r = Cube{2};
  const Scalar dd = d;
  const Scalar one_d = Scalar(1) - dd;
  auto t = boundary_rule(r, {{dd, Scalar(0)}, {Scalar(0), one_d}, {one_d, Scalar(1)}, {Scalar(1), dd}});
  return blend(square_family_lambda(d), midpoint_rule(r), t).relabeled("square-family(d=" + d.to_string() + ")");
}

inline SquareFamilyCheck verify_square_family(const Rational& d) {
  SquareFamilyCheck out;
  out.d = d;
  out.lambda = square_family_lambda(d);
  const Rational one_d = Rational(1) - d;
  out.residuals = square_system(d, one_d, one_d, d, out.lambda);
  out.solves = out.residuals.all_zero();
  const CubatureRule rule = square_family_rule(d);
  out.x3y_residual = residual(rule, MultiIndex{3, 1});
  out.printed_x3y_matches = apply_monomial(rule, MultiIndex{3, 1}) == Scalar(square_printed_x3y(d));
  return out;
}

// ---------------------------------------------------------------------------
// Trapezoid (0,0),(1,0),(1,2),(0,1): nodes (a,0), (1,c), (0,b), (d,d+1).

inline SystemResiduals trapezoid_system(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                                        const Scalar& lambda) {
  const Scalar mu = Scalar(1) - lambda;
  const Scalar t = Scalar(Rational(3, 8)) * mu;
  const Scalar one(1);
  const Scalar d1 = d + one;
  SystemResiduals out;
  out.add("x", Scalar(Rational(5, 6)) * lambda + t * (a + one + d) - Scalar(Rational(5, 6)));
  out.add("y", Scalar(Rational(7, 6)) * lambda + t * (c + b + d + one) - Scalar(Rational(7, 6)));
  out.add("x*y", Scalar(Rational(35, 54)) * lambda + t * (c + d * d1) - Scalar(Rational(17, 24)));
  out.add("x^2", Scalar(Rational(25, 54)) * lambda + t * (a * a + one + d * d) - Scalar(Rational(7, 12)));
  out.add("y^2", Scalar(Rational(49, 54)) * lambda + t * (c * c + b * b + d1 * d1) - Scalar(Rational(5, 4)));
  return out;
}

inline SystemResiduals trapezoid_system(const TrapezoidParameters& p) {
  return trapezoid_system(p.a, p.b, p.c, p.d, p.lambda);
}

/// The published basis {392 lambda-163, 9a+9d-11, 81b-99d+20, 180d-191+81c,
/// -22671d+6583+18549d^2} evaluated at p.
inline SystemResiduals trapezoid_basis_residuals(const TrapezoidParameters& p) {
  SystemResiduals out;
  out.add("392*lambda-163", Scalar(Rational(392) * p.lambda - Rational(163)));
  out.add("9a+9d-11", Scalar(9) * p.a + Scalar(9) * p.d - Scalar(11));
  out.add("81b-99d+20", Scalar(81) * p.b - Scalar(99) * p.d + Scalar(20));
  out.add("180d-191+81c", Scalar(180) * p.d - Scalar(191) + Scalar(81) * p.c);
  out.add("18549d^2-22671d+6583", Scalar(18549) * p.d * p.d - Scalar(22671) * p.d + Scalar(6583));
  return out;
}

// ---------------------------------------------------------------------------
// 3-simplex faces: Q1=(a1,a2,0), Q2=(a3,0,a4), Q3=(0,a5,a6), Q4=(a7,a8,1-a7-a8).

using FaceParameters = std::array<Scalar, 8>;

/// Three linear placement equations (x, y, z after dividing out (1-lambda)/24)
/// and six weighted quadratic equations.
inline SystemResiduals simplex3_face_system(const FaceParameters& a, const Scalar& lambda) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, a8] = a;
  const Scalar mu = Scalar(1) - lambda;
  const Scalar m = Scalar(Rational(1, 96)) * lambda;
  const Scalar t = Scalar(Rational(1, 24)) * mu;
  const Scalar z4 = Scalar(1) - a7 - a8;
  const Scalar mixed = Rational(1, 120);
  const Scalar square = Rational(1, 60);
  SystemResiduals out;
  out.add("x", a1 + a3 + a7 - Scalar(1));
  out.add("y", a2 + a5 + a8 - Scalar(1));
  out.add("z", a4 + a6 - a7 - a8);
  out.add("x*y", m + t * (a1 * a2 + a7 * a8) - mixed);
  out.add("x*z", m + t * (a3 * a4 + a7 * z4) - mixed);
  out.add("y*z", m + t * (a5 * a6 + a8 * z4) - mixed);
  out.add("x^2", m + t * (a1 * a1 + a3 * a3 + a7 * a7) - square);
  out.add("y^2", m + t * (a2 * a2 + a5 * a5 + a8 * a8) - square);
  out.add("z^2", m + t * (a4 * a4 + a6 * a6 + z4 * z4) - square);
  return out;
}

inline CubatureRule simplex3_face_rule(const FaceParameters& a, const Scalar& lambda) {
  const Region r = Simplex{3};
  const Scalar zero(0);
  std::vector<Point> face_nodes{
      {a[0], a[1], zero}, {a[2], zero, a[3]}, {zero, a[4], a[5]}, {a[6], a[7], Scalar(1) - a[6] - a[7]}};
  return blend(lambda, midpoint_rule(r), boundary_rule(r, std::move(face_nodes))).relabeled("simplex3-face");
}

/// Vertex-type placements (each Q_j at a vertex of its own face) that solve
/// all nine equations with the given lambda.
inline std::vector<FaceParameters> simplex3_vertex_solutions(const Scalar& lambda) {
  // vertices of the faces z=0, y=0, x=0 in the two free coordinates, and of
  // x+y+z=1 in (x,y)
  const std::array<std::pair<int, int>, 3> planar{{{0, 0}, {1, 0}, {0, 1}}};
  const std::array<std::pair<int, int>, 3> slanted{{{1, 0}, {0, 1}, {0, 0}}};
  std::vector<FaceParameters> out;
  for (const auto& q1 : planar)
    for (const auto& q2 : planar)
      for (const auto& q3 : planar)
        for (const auto& q4 : slanted) {
          const FaceParameters p{Scalar(q1.first), Scalar(q1.second), Scalar(q2.first), Scalar(q2.second),
                                 Scalar(q3.first), Scalar(q3.second), Scalar(q4.first), Scalar(q4.second)};
          if (simplex3_face_system(p, lambda).all_zero()) out.push_back(p);
        }
  return out;
}

// ---------------------------------------------------------------------------
// Interpolation.

struct InterpolationMatrix {
  Matrix matrix;
  Scalar det;
};

/// Basis {x^2, y^2, x, y, 1} at (a,0), (0,b), (c,1), (1,d), (1/2,1/2).
inline InterpolationMatrix interp_matrix_quadratic(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  const Scalar h = Rational(1, 2);
  const std::array<std::pair<Scalar, Scalar>, 5> nodes{{{a, 0}, {0, b}, {c, 1}, {1, d}, {h, h}}};
  Matrix m(5, 5);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& [x, y] = nodes[i];
    m(i, 0) = x * x;
    m(i, 1) = y * y;
    m(i, 2) = x;
    m(i, 3) = y;
    m(i, 4) = Scalar(1);
  }
  Scalar det = determinant(m);
  return {std::move(m), std::move(det)};
}

/// Basis {xy, x, y, 1} at (a,0), (0,b), (1,c), (d,1): the row layout whose
/// determinant is cab - ac - cdb - dab + dac + db.
inline InterpolationMatrix interp_matrix_bilinear(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  const std::array<std::pair<Scalar, Scalar>, 4> nodes{{{a, 0}, {0, b}, {1, c}, {d, 1}}};
  Matrix m(4, 4);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& [x, y] = nodes[i];
    m(i, 0) = x * y;
    m(i, 1) = x;
    m(i, 2) = y;
    m(i, 3) = Scalar(1);
  }
  Scalar det = determinant(m);
  return {std::move(m), std::move(det)};
}

inline Scalar bilinear_det_closed_form(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  return c * a * b - a * c - c * d * b - d * a * b + d * a * c + d * b;
}

/// Integral over the region of the unique interpolant in span(basis) that
/// takes `data` at `nodes`.
inline Scalar integrate_interpolant(const Region& region, const std::vector<MultiIndex>& basis,
                                    const std::vector<Point>& nodes, const std::vector<Scalar>& data) {
  if (basis.size() != nodes.size() || nodes.size() != data.size())
    throw DimensionMismatch("interpolation needs as many basis functions and data values as nodes");
  Matrix v(nodes.size(), basis.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) v(i, j) = MonomialPoly::monomial(basis[j]).evaluate(nodes[i]);
  }
  if (determinant(v).is_zero()) throw SingularInterpolation("interpolation matrix is singular; the interpolant is not unique");
  const auto outcome = solve_linear(v, data);
  const auto& coeffs = std::get<UniqueSolution>(outcome).values;
  Scalar total(0);
  for (std::size_t j = 0; j < basis.size(); ++j) total += coeffs[j] * moment(region, basis[j]);
  return total;
}

/// Weight that interpolation assigns to node i: the integral of the
/// interpolant of the indicator of node i.
inline Scalar interpolatory_weight(const Region& region, const std::vector<MultiIndex>& basis,
                                   const std::vector<Point>& nodes, std::size_t i) {
  std::vector<Scalar> data(nodes.size(), Scalar(0));
  data.at(i) = Scalar(1);
  return integrate_interpolant(region, basis, nodes, data);
}

/// {1, x1..xn, x1 x2}: the basis for the simplex centroid + vertices rule.
inline std::vector<MultiIndex> simplex_interpolation_basis(std::size_t n) {
  std::vector<MultiIndex> basis{MultiIndex::zero(n)};
  for (std::size_t k = 0; k < n; ++k) basis.push_back(MultiIndex::unit(n, k));
  if (n >= 2) {
    auto xy = MultiIndex::unit(n, 0) + MultiIndex::unit(n, 1);
    basis.push_back(std::move(xy));
  }
  return basis;
}

}  // namespace simpson
