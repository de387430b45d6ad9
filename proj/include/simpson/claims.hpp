#pragma once

// The reproducible claim suite: each check recomputes a published exactness,
// infeasibility, family or convergence statement from scratch.

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "simpson/compound.hpp"
#include "simpson/exactness.hpp"
#include "simpson/families.hpp"

namespace simpson {

struct ClaimResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;  // one line per sub-check; failures start with "FAIL"

  void check(bool ok, const std::string& what) {
    notes.push_back((ok ? "ok   " : "FAIL ") + what);
    passed = passed && ok;
  }
};

namespace claims {

inline ClaimResult cr1_exactness() {
  ClaimResult r{1, "CR1 certified degree 2 for n = 1..6, with the x_j x_k x_l witness", true, {}};
  for (unsigned n = 1; n <= 6; ++n) {
    const CubatureRule rule = cr1(n);
    const auto rep = exactness_degree(rule, 4);
    r.check(rep.degree == 2, "CR1(" + std::to_string(n) + ") degree " + std::to_string(rep.degree) +
                                 (rep.failing ? ", first failure " + rep.failing->label() + " residual " +
                                                    rep.failing_residual->to_string()
                                              : ""));
    if (n >= 3) {
      std::vector<unsigned> e(n, 0);
      e[0] = e[1] = e[2] = 1;
      const Scalar got = residual(rule, MultiIndex(e));
      const Rational want = Rational(1) / (Rational(n + 1) * Rational(factorial(n + 2), BigInt(1))) -
                            Rational(1) / Rational(factorial(n + 3), BigInt(1));
      r.check(got == Scalar(want), "CR1(" + std::to_string(n) + ") residual of x1*x2*x3 = " + got.to_string() +
                                       " (expected " + want.to_string() + ")");
    }
  }
  return r;
}

inline ClaimResult cr2_exactness() {
  ClaimResult r{2, "CR2 certified degree 2 for n = 2..5, negative centroid weight for n >= 3", true, {}};
  for (unsigned n = 2; n <= 5; ++n) {
    const CubatureRule rule = cr2(n);
    const auto rep = exactness_degree(rule, 4);
    r.check(rep.degree == 2, "CR2(" + std::to_string(n) + ") degree " + std::to_string(rep.degree));
    if (n >= 3) {
      const Point c = centroid(rule.region());
      Scalar w(0);
      for (std::size_t i = 0; i < rule.size(); ++i)
        if (rule.nodes()[i] == c) w += rule.weights()[i];
      r.check(w.sign() < 0, "CR2(" + std::to_string(n) + ") centroid weight " + w.to_string());
    }
  }
  const Region tri = Simplex{2};
  const Scalar h = Rational(1, 2);
  const CubatureRule t = boundary_rule(tri, {{h, Scalar(0)}, {Scalar(0), h}, {h, h}});
  const CubatureRule m = midpoint_rule(tri);
  const auto sol = solve_lambda(m, t, degree_targets(2, 2));
  if (const auto* u = std::get_if<UniqueSolution>(&sol)) {
    const CubatureRule b = blend(u->values[0], m, t);
    r.check(same_rule(b, cr2(2)), "CR2(2) equals the blend with lambda = " + u->values[0].to_string());
  } else {
    r.check(false, "solve_lambda for the midedge blend did not give a unique lambda");
  }
  return r;
}

inline ClaimResult cr3_exactness() {
  ClaimResult r{3, "CR3 certified degree 3 for n = 1..6, x_k^4 residual 5/24 - 1/5, Simpson for n = 1", true, {}};
  const Scalar want = Scalar(Rational(5, 24)) - Scalar(Rational(1, 5));
  for (unsigned n = 1; n <= 6; ++n) {
    const CubatureRule rule = cr3(n);
    const auto rep = exactness_degree(rule, 5);
    r.check(rep.degree == 3, "CR3(" + std::to_string(n) + ") degree " + std::to_string(rep.degree));
    bool all = true;
    for (unsigned k = 0; k < n; ++k) all = all && residual(rule, MultiIndex::unit(n, k, 4)) == want;
    r.check(all, "CR3(" + std::to_string(n) + ") every x_k^4 residual equals " + want.to_string());
  }
  const CubatureRule simpson(Cube{1}, {{Scalar(0)}, {Scalar(Rational(1, 2))}, {Scalar(1)}},
                             {Rational(1, 6), Rational(2, 3), Rational(1, 6)}, "Simpson");
  r.check(same_rule(cr3(1), simpson), "CR3(1) has weights 1/6, 2/3, 1/6 at 0, 1/2, 1");
  return r;
}

inline ClaimResult cr4_exactness() {
  ClaimResult r{4, "CR4 certified degree 3, exact for x^3y and xy^3, x^4 residual 5/24 - 1/5", true, {}};
  const CubatureRule rule = cr4();
  const auto rep = exactness_degree(rule, 5);
  r.check(rep.degree == 3, "CR4 degree " + std::to_string(rep.degree));
  r.check(residual(rule, MultiIndex{3, 1}).is_zero(), "residual of x^3y is 0");
  r.check(residual(rule, MultiIndex{1, 3}).is_zero(), "residual of xy^3 is 0");
  const Scalar x4 = residual(rule, MultiIndex{4, 0});
  r.check(x4 == Scalar(Rational(5, 24)) - Scalar(Rational(1, 5)), "residual of x^4 = " + x4.to_string());
  return r;
}

inline ClaimResult cr5_exactness() {
  ClaimResult r{5, "CR5 in Q(sqrt 3893) certified degree 2, x^3 residual 336001/762048 - 9/20", true, {}};
  const CubatureRule rule = cr5();
  bool surd = false;
  for (const auto& p : rule.nodes())
    for (const auto& c : p) surd = surd || (c.is_quadratic() && c.as_quadratic().radicand() == kTrapezoidRadicand);
  r.check(surd, "nodes carry sqrt(3893)");
  const auto rep = exactness_degree(rule, 4);
  r.check(rep.degree == 2, "CR5 degree " + std::to_string(rep.degree));
  const Scalar x3 = residual(rule, MultiIndex{3, 0});
  r.check(x3 == Scalar(Rational(336001, 762048)) - Scalar(Rational(9, 20)), "residual of x^3 = " + x3.to_string());
  return r;
}

inline ClaimResult cr6_exactness() {
  ClaimResult r{6, "CR6 certified degree 3 on the disc, x^4 residual pi/4 - pi/8", true, {}};
  const CubatureRule rule = cr6();
  const auto rep = exactness_degree(rule, 5);
  r.check(rep.degree == 3, "CR6 degree " + std::to_string(rep.degree));
  const Scalar x4 = residual(rule, MultiIndex{4, 0});
  r.check(x4 == Scalar::pi(Rational(1, 4)) - Scalar::pi(Rational(1, 8)), "residual of x^4 = " + x4.to_string());
  return r;
}

inline ClaimResult midedge_exactness() {
  ClaimResult r{7, "Triangle midedge rule certified degree 2, L(x^3) = 1/24 against 1/20", true, {}};
  const CubatureRule rule = triangle_midedge();
  const auto rep = exactness_degree(rule, 4);
  r.check(rep.degree == 2, "midedge degree " + std::to_string(rep.degree));
  const Scalar l = apply_monomial(rule, MultiIndex{3, 0});
  const Scalar i = moment(rule.region(), MultiIndex{3, 0});
  r.check(l == Scalar(Rational(1, 24)) && i == Scalar(Rational(1, 20)),
          "L(x^3) = " + l.to_string() + ", I(x^3) = " + i.to_string());
  return r;
}

inline ClaimResult negative_results() {
  ClaimResult r{8, "Hexagon blend and trapezoid weight system are infeasible at degree 2", true, {}};
  const Region hex = hexagon_region();
  const auto hs = solve_lambda(midpoint_rule(hex), vertex_rule(hex), degree_targets(2, 2));
  const auto* hi = std::get_if<Infeasible>(&hs);
  r.check(hi != nullptr, "hexagon solve_lambda: " + (hi ? hi->description : std::string("not infeasible")));

  const Region trap = trapezoid_region();
  auto pt = [](Rational a, Rational b) { return Point{Scalar(std::move(a)), Scalar(std::move(b))}; };
  const std::vector<Point> nodes{pt(Rational(5, 9), Rational(7, 9)), pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 2)};
  const auto full = solve_weights(trap, nodes, degree_targets(2, 2));
  r.check(std::holds_alternative<Infeasible>(full), "trapezoid 5-node system with all degree <= 2 targets is infeasible");
  const auto dropped = solve_weights(trap, nodes, degree_targets(2, 2, {MultiIndex{1, 1}}));
  const std::vector<Scalar> want{Rational(81, 80), Rational(23, 240), Rational(17, 120), Rational(29, 240),
                                 Rational(31, 240)};
  const auto* u = std::get_if<UniqueSolution>(&dropped);
  std::string got = "no unique solution";
  if (u) {
    got.clear();
    for (const auto& w : u->values) got += (got.empty() ? "" : ", ") + w.to_string();
  }
  r.check(u && u->values == want, "without xy the weights are (" + got + ")");
  return r;
}

inline ClaimResult families() {
  ClaimResult r{9, "Triangle and square families, selector roots, and the 3-simplex face point", true, {}};
  // deterministic pseudo-random rationals in [0,1]
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const auto den = static_cast<long>((state >> 33) % 97 + 2);
    const auto num = static_cast<long>((state >> 13) % static_cast<std::uint64_t>(den + 1));
    return Rational(num, den);
  };
  bool tri_ok = true, sq_ok = true;
  for (int i = 0; i < 20; ++i) {
    Rational c = next();
    while ((Rational(12) * c * c - Rational(12) * c + Rational(4)).is_zero()) c = next();
    tri_ok = tri_ok && verify_triangle_family(c).solves;
    sq_ok = sq_ok && verify_square_family(next()).solves;
  }
  r.check(tri_ok, "triangle family residuals vanish at 20 random c");
  r.check(sq_ok, "square family residuals vanish at 20 random d");
  auto roots_text = [](const std::vector<Rational>& rs) {
    std::string s;
    for (const auto& x : rs) s += (s.empty() ? "" : ", ") + x.to_string();
    return "{" + s + "}";
  };
  const auto tr = rational_roots(triangle_selector_polynomial());
  r.check(tr == std::vector<Rational>{Rational(0), Rational(1, 2)}, "triangle selector roots " + roots_text(tr));
  const auto sr = rational_roots(square_selector_polynomial());
  r.check(sr == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)}, "square selector roots " + roots_text(sr));
  FaceParameters p;
  p.fill(Scalar(Rational(1, 3)));
  const Scalar lambda = Rational(-4, 5);
  r.check(simplex3_face_system(p, lambda).all_zero(), "a_j = 1/3, lambda = -4/5 zeroes all nine residuals");
  r.check(same_rule(simplex3_face_rule(p, lambda), cr2(3)), "that rule equals CR2(3)");
  return r;
}

inline ClaimResult interpolation() {
  ClaimResult r{10, "Interpolant integrals reproduce CR1, midedge and CR4 weights; determinant checks", true, {}};
  auto reproduces = [](const CubatureRule& rule, const std::vector<MultiIndex>& basis) {
    for (std::size_t i = 0; i < rule.size(); ++i)
      if (interpolatory_weight(rule.region(), basis, rule.nodes(), i) != rule.weights()[i]) return false;
    return true;
  };
  for (unsigned n = 2; n <= 4; ++n)
    r.check(reproduces(cr1(n), simplex_interpolation_basis(n)), "CR1(" + std::to_string(n) + ") weights");
  r.check(reproduces(triangle_midedge(), {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{0, 1}}), "midedge weights");
  r.check(reproduces(cr4(), {MultiIndex{2, 0}, MultiIndex{0, 2}, MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{0, 0}}),
          "CR4 weights");
  const Scalar h = Rational(1, 2);
  const Scalar b = interp_matrix_quadratic(h, h, h, h).det;
  r.check(b == Scalar(Rational(1, 16)), "det B at a=b=c=d=1/2 is " + b.to_string());
  const Scalar b1 = interp_matrix_quadratic(1, 0, 0, 1).det;
  r.check(b1.is_zero(), "det B at (1,0,0,1) is " + b1.to_string());
  const Scalar a = interp_matrix_bilinear(h, h, h, h).det;
  r.check(a.is_zero(), "det A at a=b=c=d=1/2 is " + a.to_string());
  const Scalar a1 = interp_matrix_bilinear(1, 0, 0, 1).det;
  r.check(a1.is_zero(), "det A at (1,0,0,1) is " + a1.to_string());
  return r;
}

namespace detail {

/// Integral of x^alpha over the simplex or cube by nested one-variable
/// integration of exact polynomials, independent of the closed forms.
inline Rational iterated_moment(bool simplex, const MultiIndex& alpha) {
  const std::size_t n = alpha.dimension();
  // integrand as a polynomial in (x1..xn, s) where s is the remaining
  // budget 1 - x1 - ... - x_{k-1} for the simplex
  MonomialPoly p = MonomialPoly::monomial(MultiIndex(std::vector<unsigned>(alpha.exponents())));
  // integrate the last variable first: x_n from 0 to (1 - x1 - ... - x_{n-1}) or 1
  for (std::size_t k = n; k-- > 0;) {
    MonomialPoly next(n);
    for (const auto& [e, c] : p.terms()) {
      const unsigned ek = e[k];
      std::vector<unsigned> rest(e.exponents());
      rest[k] = 0;
      const Rational coef = c / Rational(ek + 1);
      if (!simplex) {
        next.add_term(MultiIndex(rest), coef);
        continue;
      }
      // upper limit u = 1 - x1 - ... - x_k-1, raised to ek + 1
      MonomialPoly u = MonomialPoly::constant(n, Rational(1));
      for (std::size_t j = 0; j < k; ++j) u = u - MonomialPoly::variable(n, j);
      next = next + pow(u, ek + 1) * MonomialPoly::monomial(MultiIndex(rest), coef);
    }
    p = next;
  }
  return p.coefficient(MultiIndex::zero(n));
}

}  // namespace detail

inline ClaimResult moment_oracle() {
  ClaimResult r{11, "Closed-form moments agree with iterated integration; polygon triangle equals simplex", true, {}};
  for (unsigned n = 1; n <= 4; ++n) {
    bool s_ok = true, c_ok = true;
    for (const auto& alpha : monomials_up_to(n, 4)) {
      s_ok = s_ok && moment(Simplex{n}, alpha) == Scalar(detail::iterated_moment(true, alpha));
      c_ok = c_ok && moment(Cube{n}, alpha) == Scalar(detail::iterated_moment(false, alpha));
    }
    r.check(s_ok, "simplex:" + std::to_string(n) + " moments up to degree 4");
    r.check(c_ok, "cube:" + std::to_string(n) + " moments up to degree 4");
  }
  bool p_ok = true;
  for (const auto& alpha : monomials_up_to(2, 6))
    p_ok = p_ok && moment(standard_triangle_polygon(), alpha) == moment(Simplex{2}, alpha);
  r.check(p_ok, "polygon (0,0),(1,0),(0,1) moments equal simplex:2 moments up to degree 6");
  return r;
}

inline ClaimResult convergence() {
  ClaimResult r{12, "Compound CR4 converges at order 4 +- 0.3, compound midedge at order >= 2.7", true, {}};
  const RealFunction f = [](std::span<const double> x) { return std::exp(x[0] + x[1]); };
  const double e1 = std::numbers::e - 1.0;
  std::vector<CompoundEstimate> sq, tri;
  for (int level = 1; level <= 5; ++level) {
    sq.push_back(compound_apply(cr4(), level, f));
    tri.push_back(compound_apply(triangle_midedge(), level, f));
  }
  std::ostringstream a, b;
  const double p4 = convergence_order(sq, e1 * e1);
  const double pt = convergence_order(tri, 1.0);
  a << "CR4 on exp(x+y) over the square: order " << p4;
  b << "midedge on exp(x+y) over the triangle: order " << pt;
  r.check(std::abs(p4 - 4.0) <= 0.3, a.str());
  r.check(pt >= 2.7, b.str());
  return r;
}

}  // namespace claims

/// Every claim in order. Exceptions inside a claim are reported as failures.
inline std::vector<ClaimResult> run_all_claims() {
  const std::vector<std::function<ClaimResult()>> all{
      claims::cr1_exactness, claims::cr2_exactness,    claims::cr3_exactness,    claims::cr4_exactness,
      claims::cr5_exactness, claims::cr6_exactness,    claims::midedge_exactness, claims::negative_results,
      claims::families,      claims::interpolation,    claims::moment_oracle,    claims::convergence};
  std::vector<ClaimResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      out.push_back(all[i]());
    } catch (const std::exception& e) {
      ClaimResult r{static_cast<int>(i + 1), "claim " + std::to_string(i + 1), false, {}};
      r.check(false, std::string("exception: ") + e.what());
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace simpson
