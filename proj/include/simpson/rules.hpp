#pragma once

// Cubature rules: representation, the midpoint / vertex / boundary rules,
// their lambda-blend, and the catalog of named rules.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simpson/polynomial.hpp"
#include "simpson/regions.hpp"

namespace simpson {

/// Finite node/weight list over a region. Nodes are validated to lie in the
/// closed region; weights may be negative.
class CubatureRule {
 public:
  CubatureRule(Region region, std::vector<Point> nodes, std::vector<Scalar> weights, std::string label)
      : region_(std::move(region)), nodes_(std::move(nodes)), weights_(std::move(weights)), label_(std::move(label)) {
    if (nodes_.empty()) throw InvalidRule("a rule needs at least one node");
    if (nodes_.size() != weights_.size()) throw InvalidRule("node and weight counts differ");
    for (const auto& x : nodes_) {
      if (x.size() != region_.dimension()) throw DimensionMismatch("node dimension does not match region");
      if (!contains(region_, x)) throw NodeOutsideRegion("node " + point_text(x) + " is outside " + region_.describe());
    }
  }

  const Region& region() const noexcept { return region_; }
  const std::vector<Point>& nodes() const noexcept { return nodes_; }
  const std::vector<Scalar>& weights() const noexcept { return weights_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t dimension() const { return region_.dimension(); }

  CubatureRule relabeled(std::string label) const {
    CubatureRule copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

  Scalar weight_sum() const {
    Scalar s(0);
    for (const auto& w : weights_) s += w;
    return s;
  }

  bool all_weights_positive() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Scalar& w) { return w.sign() > 0; });
  }

  static std::string point_text(const Point& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ", ";
      out += x[i].to_string();
    }
    return out + ")";
  }

  friend bool operator==(const CubatureRule&, const CubatureRule&) = default;

 private:
  Region region_;
  std::vector<Point> nodes_;
  std::vector<Scalar> weights_;
  std::string label_;
};

/// Single node at the centroid with weight equal to the volume.
inline CubatureRule midpoint_rule(const Region& r) { return {r, {centroid(r)}, {volume(r)}, "M"}; }

/// Equal weights volume/m at the m vertices.
inline CubatureRule vertex_rule(const Region& r) {
  auto vs = vertices(r);
  const Scalar w = volume(r) / Scalar(Rational(static_cast<long>(vs.size())));
  std::vector<Scalar> weights(vs.size(), w);
  return {r, std::move(vs), std::move(weights), "T"};
}

/// Equal weights volume/m at m caller-chosen boundary nodes.
inline CubatureRule boundary_rule(const Region& r, std::vector<Point> nodes) {
  if (nodes.empty()) throw InvalidRule("boundary rule needs at least one node");
  for (const auto& x : nodes) {
    if (x.size() != r.dimension()) throw DimensionMismatch("node dimension does not match region");
    if (!on_boundary(r, x))
      throw NodeNotOnBoundary("node " + CubatureRule::point_text(x) + " is not on the boundary of " + r.describe());
  }
  const Scalar w = volume(r) / Scalar(Rational(static_cast<long>(nodes.size())));
  std::vector<Scalar> weights(nodes.size(), w);
  return {r, std::move(nodes), std::move(weights), "T"};
}

/// lambda*M + (1-lambda)*T with zero-weight nodes dropped.
inline CubatureRule blend(const Scalar& lambda, const CubatureRule& m, const CubatureRule& t) {
  if (!(m.region() == t.region())) throw RegionMismatch("blend of rules over different regions");
  std::vector<Point> nodes;
  std::vector<Scalar> weights;
  const Scalar mu = Scalar(1) - lambda;
  auto take = [&](const CubatureRule& rule, const Scalar& scale) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      Scalar w = scale * rule.weights()[i];
      if (w.is_zero()) continue;
      nodes.push_back(rule.nodes()[i]);
      weights.push_back(std::move(w));
    }
  };
  take(m, lambda);
  take(t, mu);
  if (nodes.empty()) throw InvalidRule("blend produced no nonzero weights");
  return {m.region(), std::move(nodes), std::move(weights), "L[" + lambda.to_string() + "]"};
}

/// Exact sum of w_i p(x_i).
inline Scalar apply_poly(const CubatureRule& rule, const MonomialPoly& p) {
  if (p.dimension() != rule.dimension()) throw DimensionMismatch("polynomial dimension does not match rule");
  Scalar sum(0);
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights()[i] * p.evaluate(rule.nodes()[i]);
  return sum;
}

inline Scalar apply_monomial(const CubatureRule& rule, const MultiIndex& alpha) {
  return apply_poly(rule, MonomialPoly::monomial(alpha));
}

using RealFunction = std::function<double(std::span<const double>)>;

/// Floating evaluation in node order.
inline double apply_fn(const CubatureRule& rule, const RealFunction& f) {
  double sum = 0.0;
  std::vector<double> x(rule.dimension());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = rule.nodes()[i][k].to_double();
    sum += rule.weights()[i].to_double() * f(x);
  }
  return sum;
}

/// Same node/weight multiset (order-insensitive, repeated nodes merged).
inline bool same_rule(const CubatureRule& a, const CubatureRule& b) {
  if (!(a.region() == b.region())) return false;
  auto merged = [](const CubatureRule& r) {
    std::vector<std::pair<Point, Scalar>> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == r.nodes()[i]; });
      if (it == out.end()) {
        out.emplace_back(r.nodes()[i], r.weights()[i]);
      } else {
        it->second += r.weights()[i];
      }
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
  };
  const auto ma = merged(a);
  const auto mb = merged(b);
  if (ma.size() != mb.size()) return false;
  return std::all_of(ma.begin(), ma.end(), [&](const auto& e) {
    return std::find(mb.begin(), mb.end(), e) != mb.end();
  });
}

// ---------------------------------------------------------------------------
// Named rules, built from their closed-form weights.

enum class RuleName { CR1, CR2, CR3, CR4, CR5, CR5Conjugate, CR6, TriangleMidedge };

inline Point uniform_point(unsigned n, const Scalar& v) { return Point(n, v); }

/// Simplex, centroid + vertices, exact for degree 2.
inline CubatureRule cr1(unsigned n) {
  const Region r = Simplex{n};
  const Rational centre_w = Rational(n + 1) / (Rational(n + 2) * Rational(factorial(n), BigInt(1)));
  const Rational vertex_w = Rational(BigInt(1), factorial(n + 2));
  std::vector<Point> nodes{uniform_point(n, Rational(1) / Rational(n + 1))};
  std::vector<Scalar> weights{centre_w};
  for (auto& v : vertices(r)) {
    nodes.push_back(std::move(v));
    weights.emplace_back(vertex_w);
  }
  return {r, std::move(nodes), std::move(weights), "CR1(n=" + std::to_string(n) + ")"};
}

/// Simplex, centroid + face centroids. The centroid weight is negative for
/// n >= 3 and vanishes (node dropped) for n = 2.
inline CubatureRule cr2(unsigned n) {
  const Region r = Simplex{n};
  const Rational centre_w = -Rational(static_cast<long>(n) - 2) * Rational(n + 1) /
                            (Rational(n + 2) * Rational(factorial(n), BigInt(1)));
  const Rational face_w = Rational(BigInt(n) * n, factorial(n + 2));
  std::vector<Point> nodes;
  std::vector<Scalar> weights;
  if (!centre_w.is_zero()) {
    nodes.push_back(uniform_point(n, Rational(1) / Rational(n + 1)));
    weights.emplace_back(centre_w);
  }
  const Scalar third = Rational(1) / Rational(n);
  for (unsigned k = 0; k <= n; ++k) {
    Point q = uniform_point(n, third);
    if (k < n) q[k] = Scalar(0);
    nodes.push_back(std::move(q));
    weights.emplace_back(face_w);
  }
  return {r, std::move(nodes), std::move(weights), "CR2(n=" + std::to_string(n) + ")"};
}

/// Cube, 2/3 at the centre and 1/(3*2^n) at each vertex; exact for degree 3.
inline CubatureRule cr3(unsigned n) {
  const Region r = Cube{n};
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, n);
  std::vector<Point> nodes{uniform_point(n, Rational(1, 2))};
  std::vector<Scalar> weights{Rational(2, 3)};
  for (auto& v : vertices(r)) {
    nodes.push_back(std::move(v));
    weights.emplace_back(Rational(BigInt(1), 3 * m));
  }
  return {r, std::move(nodes), std::move(weights), "CR3(n=" + std::to_string(n) + ")"};
}

/// Unit square, centre + edge midpoints.
inline CubatureRule cr4() {
  const Scalar h = Rational(1, 2);
  std::vector<Point> nodes{{h, h}, {h, Scalar(0)}, {Scalar(0), h}, {h, Scalar(1)}, {Scalar(1), h}};
  std::vector<Scalar> weights{Rational(1, 3), Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(1, 6)};
  return {Cube{2}, std::move(nodes), std::move(weights), "CR4"};
}

/// Boundary parameters of the trapezoid rule: nodes (a,0), (1,c), (0,b),
/// (d,d+1) and blend weight lambda.
struct TrapezoidParameters {
  Scalar a, b, c, d;
  Rational lambda;
};

inline constexpr std::int64_t kTrapezoidRadicand = 3893;

/// The published root d = 11/18 + sqrt(3893)/458 and its companions.
inline TrapezoidParameters cr5_parameters() {
  constexpr auto D = kTrapezoidRadicand;
  return {Scalar::quad(Rational(11, 18), Rational(-1, 458), D), Scalar::quad(Rational(1, 2), Rational(11, 4122), D),
          Scalar::quad(Rational(1), Rational(-10, 2061), D), Scalar::quad(Rational(11, 18), Rational(1, 458), D),
          Rational(163, 392)};
}

/// The other root d = 11/18 - sqrt(3893)/458, companions from the linear
/// relations 9a+9d=11, 81b=99d-20, 81c=191-180d.
inline TrapezoidParameters cr5_conjugate_parameters() {
  const Scalar d = Scalar::quad(Rational(11, 18), Rational(-1, 458), kTrapezoidRadicand);
  const Scalar a = Scalar(Rational(11, 9)) - d;
  const Scalar b = (Scalar(99) * d - Scalar(20)) / Scalar(81);
  const Scalar c = (Scalar(191) - Scalar(180) * d) / Scalar(81);
  return {a, b, c, d, Rational(163, 392)};
}

inline CubatureRule trapezoid_rule(const TrapezoidParameters& p, std::string label) {
  const Region r = trapezoid_region();
  const Scalar lambda = p.lambda;
  const Scalar centre_w = lambda * Scalar(Rational(3, 2));
  const Scalar edge_w = (Scalar(1) - lambda) * Scalar(Rational(3, 8));
  std::vector<Point> nodes{{Scalar(Rational(5, 9)), Scalar(Rational(7, 9))},
                           {p.a, Scalar(0)},
                           {Scalar(1), p.c},
                           {Scalar(0), p.b},
                           {p.d, p.d + Scalar(1)}};
  std::vector<Scalar> weights{centre_w, edge_w, edge_w, edge_w, edge_w};
  return {r, std::move(nodes), std::move(weights), std::move(label)};
}

inline CubatureRule cr5() { return trapezoid_rule(cr5_parameters(), "CR5"); }
inline CubatureRule cr5_conjugate() { return trapezoid_rule(cr5_conjugate_parameters(), "CR5-conjugate"); }

/// Unit disc, pi/2 at the origin and pi/8 at the four axis points.
inline CubatureRule cr6() {
  std::vector<Point> nodes{{Scalar(0), Scalar(0)},
                           {Scalar(1), Scalar(0)},
                           {Scalar(0), Scalar(1)},
                           {Scalar(-1), Scalar(0)},
                           {Scalar(0), Scalar(-1)}};
  const Scalar edge = Scalar::pi(Rational(1, 8));
  std::vector<Scalar> weights{Scalar::pi(Rational(1, 2)), edge, edge, edge, edge};
  return {UnitDisc{}, std::move(nodes), std::move(weights), "CR6"};
}

/// Triangle edge midpoints, weight 1/6 each.
inline CubatureRule triangle_midedge() {
  const Scalar h = Rational(1, 2);
  std::vector<Point> nodes{{h, Scalar(0)}, {Scalar(0), h}, {h, h}};
  std::vector<Scalar> weights(3, Scalar(Rational(1, 6)));
  return {Simplex{2}, std::move(nodes), std::move(weights), "TriangleMidedge"};
}

inline bool rule_takes_dimension(RuleName name) {
  return name == RuleName::CR1 || name == RuleName::CR2 || name == RuleName::CR3;
}

inline CubatureRule named_rule(RuleName name, unsigned n = 2) {
  if (rule_takes_dimension(name) && n < 1) throw InvalidRegion("dimension must be >= 1");
  switch (name) {
    case RuleName::CR1: return cr1(n);
    case RuleName::CR2:
      if (n < 2) throw InvalidRegion("CR2 needs dimension >= 2");
      return cr2(n);
    case RuleName::CR3: return cr3(n);
    case RuleName::CR4: return cr4();
    case RuleName::CR5: return cr5();
    case RuleName::CR5Conjugate: return cr5_conjugate();
    case RuleName::CR6: return cr6();
    case RuleName::TriangleMidedge: return triangle_midedge();
  }
  throw InvalidRule("unknown rule");
}

inline std::optional<RuleName> parse_rule_name(std::string_view text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "cr1") return RuleName::CR1;
  if (s == "cr2") return RuleName::CR2;
  if (s == "cr3") return RuleName::CR3;
  if (s == "cr4") return RuleName::CR4;
  if (s == "cr5") return RuleName::CR5;
  if (s == "cr5-conjugate" || s == "cr5conjugate") return RuleName::CR5Conjugate;
  if (s == "cr6") return RuleName::CR6;
  if (s == "trianglemidedge" || s == "triangle-midedge" || s == "midedge") return RuleName::TriangleMidedge;
  return std::nullopt;
}

/// Exactness degree each named rule is published with.
inline int claimed_degree(RuleName name) {
  switch (name) {
    case RuleName::CR1:
    case RuleName::CR2:
    case RuleName::CR5:
    case RuleName::CR5Conjugate:
    case RuleName::TriangleMidedge: return 2;
    case RuleName::CR3:
    case RuleName::CR4:
    case RuleName::CR6: return 3;
  }
  return -1;
}

}  // namespace simpson
