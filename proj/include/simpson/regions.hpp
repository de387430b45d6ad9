#pragma once

// Integration regions with exact volume, centroid and monomial moments.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simpson/multi_index.hpp"
#include "simpson/scalar.hpp"

namespace simpson {

using Point = std::vector<Scalar>;

/// Standard simplex with vertices at the origin and the unit points.
struct Simplex {
  unsigned dimension;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Unit cube [0,1]^n.
struct Cube {
  unsigned dimension;
  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Closed unit disc in the plane.
struct UnitDisc {
  friend bool operator==(const UnitDisc&, const UnitDisc&) = default;
};

/// Simple planar polygon, stored counterclockwise.
class Polygon {
 public:
  /// Validates at least three distinct 2-D vertices, nonzero area and
  /// simplicity; reverses clockwise input.
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }

  /// Twice the signed area (positive after normalization).
  Scalar doubled_area() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> v_;
};

class Region {
 public:
  using Storage = std::variant<Simplex, Cube, Polygon, UnitDisc>;

  Region(Simplex s) : r_(s) {  // NOLINT(google-explicit-constructor)
    if (s.dimension < 1) throw InvalidRegion("simplex dimension must be >= 1");
  }
  Region(Cube c) : r_(c) {  // NOLINT(google-explicit-constructor)
    if (c.dimension < 1) throw InvalidRegion("cube dimension must be >= 1");
  }
  Region(Polygon p) : r_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Region(UnitDisc d) : r_(d) {}            // NOLINT(google-explicit-constructor)

  const Storage& storage() const noexcept { return r_; }
  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(r_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(r_);
  }

  std::size_t dimension() const;
  std::string describe() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Storage r_;
};

namespace detail {

inline Scalar cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline bool between(const Scalar& lo, const Scalar& x, const Scalar& hi) {
  if (compare(lo, hi) > 0) return compare(hi, x) <= 0 && compare(x, lo) <= 0;
  return compare(lo, x) <= 0 && compare(x, hi) <= 0;
}

/// p lies on the closed segment [a,b].
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (!cross2(a, b, p).is_zero()) return false;
  return between(a[0], p[0], b[0]) && between(a[1], p[1], b[1]);
}

inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = cross2(c, d, a).sign();
  const int d2 = cross2(c, d, b).sign();
  const int d3 = cross2(a, b, c).sign();
  const int d4 = cross2(a, b, d).sign();
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(c, d, a)) || (d2 == 0 && on_segment(c, d, b)) || (d3 == 0 && on_segment(a, b, c)) ||
         (d4 == 0 && on_segment(a, b, d));
}

/// Coefficients of (x0 + t*dx)^p in powers of t.
inline std::vector<Scalar> binomial_expand(const Scalar& x0, const Scalar& dx, unsigned p) {
  std::vector<Scalar> out(p + 1);
  BigInt binom(1);
  for (unsigned k = 0; k <= p; ++k) {
    out[k] = Scalar(Rational(binom, BigInt(1))) * pow(x0, p - k) * pow(dx, k);
    binom = binom * (p - k) / (k + 1);
  }
  return out;
}

inline std::vector<Scalar> convolve(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Rational disc_even_moment(unsigned m, unsigned n) {
  // both exponents even; the three closed forms for (m,n), (m,0), (0,n)
  if (m == 0 && n == 0) return Rational(1);
  auto f = [](unsigned k) { return factorial(k); };
  BigInt two_pow;
  if (m != 0 && n != 0) {
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m + n - 3);
    const BigInt num = f(n - 1) * f(m - 1);
    const BigInt den = two_pow * f(n / 2 - 1) * f(m / 2 - 1) * f((m + n) / 2);
    return Rational(num, den) / Rational(m + n + 2);
  }
  const unsigned k = m + n;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k - 2);
  const BigInt num = f(k - 1);
  const BigInt den = two_pow * f(k / 2 - 1) * f(k / 2);
  return Rational(num, den) / Rational(k + 2);
}

}  // namespace detail

inline Polygon::Polygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw InvalidRegion("polygon needs at least 3 vertices");
  for (const auto& p : v_) {
    if (p.size() != 2) throw InvalidRegion("polygon vertices must be 2-dimensional");
  }
  for (std::size_t i = 0; i < v_.size(); ++i)
    for (std::size_t j = i + 1; j < v_.size(); ++j)
      if (v_[i] == v_[j]) throw InvalidRegion("polygon has repeated vertices");
  const int orientation = doubled_area().sign();
  if (orientation == 0) throw InvalidRegion("polygon has zero area");
  if (orientation < 0) std::reverse(v_.begin(), v_.end());
  const std::size_t m = v_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % m];
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      const Point& c = v_[j];
      const Point& d = v_[(j + 1) % m];
      if (adjacent) {
        // adjacent edges may only share their common endpoint
        const Point& shared = (j == i + 1) ? b : a;
        const Point& far_ab = (j == i + 1) ? a : b;
        const Point& far_cd = (j == i + 1) ? d : c;
        if (detail::cross2(shared, far_ab, far_cd).is_zero() &&
            (detail::on_segment(shared, far_ab, far_cd) || detail::on_segment(shared, far_cd, far_ab)))
          throw InvalidRegion("polygon edges overlap");
        continue;
      }
      if (detail::segments_intersect(a, b, c, d)) throw InvalidRegion("polygon is not simple");
    }
  }
}

inline Scalar Polygon::doubled_area() const {
  Scalar s(0);
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % v_.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s;
}

inline std::size_t Region::dimension() const {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Simplex> || std::is_same_v<T, Cube>) {
          return r.dimension;
        } else {
          return 2;
        }
      },
      r_);
}

inline std::string Region::describe() const {
  if (is<Simplex>()) return "simplex:" + std::to_string(as<Simplex>().dimension);
  if (is<Cube>()) return "cube:" + std::to_string(as<Cube>().dimension);
  if (is<UnitDisc>()) return "disc";
  std::string out = "polygon[";
  const auto& vs = as<Polygon>().vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += "(" + vs[i][0].to_string() + ", " + vs[i][1].to_string() + ")";
  }
  return out + "]";
}

/// Exact integral of x^alpha over the region.
inline Scalar moment(const Region& r, const MultiIndex& alpha) {
  if (alpha.dimension() != r.dimension())
    throw DimensionMismatch("moment index has dimension " + std::to_string(alpha.dimension()) + ", region has " +
                            std::to_string(r.dimension()));
  if (r.is<Simplex>()) {
    // Dirichlet: prod(alpha_i!) / (n + |alpha|)!
    BigInt num(1);
    for (unsigned e : alpha.exponents()) num *= factorial(e);
    return Rational(num, factorial(r.as<Simplex>().dimension + alpha.degree()));
  }
  if (r.is<Cube>()) {
    Rational out(1);
    for (unsigned e : alpha.exponents()) out /= Rational(e + 1);
    return out;
  }
  if (r.is<UnitDisc>()) {
    const unsigned m = alpha[0];
    const unsigned n = alpha[1];
    if (m % 2 == 1 || n % 2 == 1) return Scalar::pi(Rational(0));
    return Scalar::pi(detail::disc_even_moment(m, n));
  }
  // Green's theorem: x^p y^q dA = -1/(q+1) * closed integral of x^p y^(q+1) dx
  const unsigned p = alpha[0];
  const unsigned q = alpha[1];
  const auto& vs = r.as<Polygon>().vertices();
  Scalar total(0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& a = vs[i];
    const Point& b = vs[(i + 1) % vs.size()];
    const Scalar dx = b[0] - a[0];
    if (dx.is_zero()) continue;
    const Scalar dy = b[1] - a[1];
    const auto poly = detail::convolve(detail::binomial_expand(a[0], dx, p), detail::binomial_expand(a[1], dy, q + 1));
    Scalar edge(0);
    for (std::size_t k = 0; k < poly.size(); ++k) edge += poly[k] / Scalar(Rational(static_cast<long>(k + 1)));
    total += edge * dx;
  }
  return -total / Scalar(Rational(q + 1));
}

inline Scalar volume(const Region& r) { return moment(r, MultiIndex::zero(r.dimension())); }

inline Point centroid(const Region& r) {
  const std::size_t n = r.dimension();
  const Scalar vol = volume(r);
  Point c;
  c.reserve(n);
  for (std::size_t k = 0; k < n; ++k) c.push_back(moment(r, MultiIndex::unit(n, k)) / vol);
  return c;
}

/// Canonical vertex list: simplex origin then unit points; cube 0/1 tuples
/// in lexicographic order; polygon in stored (counterclockwise) order.
inline std::vector<Point> vertices(const Region& r) {
  if (r.is<UnitDisc>()) throw NoVertices("the unit disc has no vertices");
  if (r.is<Polygon>()) return r.as<Polygon>().vertices();
  std::vector<Point> out;
  if (r.is<Simplex>()) {
    const unsigned n = r.as<Simplex>().dimension;
    out.emplace_back(n, Scalar(0));
    for (unsigned k = 0; k < n; ++k) {
      Point p(n, Scalar(0));
      p[k] = Scalar(1);
      out.push_back(std::move(p));
    }
    return out;
  }
  const unsigned n = r.as<Cube>().dimension;
  const std::size_t m = std::size_t{1} << n;
  for (std::size_t bits = 0; bits < m; ++bits) {
    Point p(n);
    for (unsigned k = 0; k < n; ++k) p[k] = Scalar(static_cast<int>((bits >> (n - 1 - k)) & 1U));
    out.push_back(std::move(p));
  }
  return out;
}

/// Closed-region membership, decided exactly.
inline bool contains(const Region& r, const Point& x) {
  if (x.size() != r.dimension()) throw DimensionMismatch("point dimension does not match region");
  if (r.is<Simplex>()) {
    Scalar sum(0);
    for (const auto& xi : x) {
      if (xi.sign() < 0) return false;
      sum += xi;
    }
    return compare(sum, Scalar(1)) <= 0;
  }
  if (r.is<Cube>()) {
    for (const auto& xi : x)
      if (xi.sign() < 0 || compare(xi, Scalar(1)) > 0) return false;
    return true;
  }
  if (r.is<UnitDisc>()) return compare(x[0] * x[0] + x[1] * x[1], Scalar(1)) <= 0;
  const auto& vs = r.as<Polygon>().vertices();
  bool inside = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& a = vs[i];
    const Point& b = vs[(i + 1) % vs.size()];
    if (detail::on_segment(a, b, x)) return true;
    const bool a_above = compare(a[1], x[1]) > 0;
    const bool b_above = compare(b[1], x[1]) > 0;
    if (a_above == b_above) continue;
    // crossing abscissa > x[0]  <=>  sign(cross) matches edge direction
    const int s = detail::cross2(a, b, x).sign();
    if ((b_above && s > 0) || (!b_above && s < 0)) inside = !inside;
  }
  return inside;
}

inline bool on_boundary(const Region& r, const Point& x) {
  if (!contains(r, x)) return false;
  if (r.is<Simplex>()) {
    Scalar sum(0);
    bool face = false;
    for (const auto& xi : x) {
      face = face || xi.is_zero();
      sum += xi;
    }
    return face || sum == Scalar(1);
  }
  if (r.is<Cube>()) {
    for (const auto& xi : x)
      if (xi.is_zero() || xi == Scalar(1)) return true;
    return false;
  }
  if (r.is<UnitDisc>()) return x[0] * x[0] + x[1] * x[1] == Scalar(1);
  const auto& vs = r.as<Polygon>().vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (detail::on_segment(vs[i], vs[(i + 1) % vs.size()], x)) return true;
  return false;
}

/// The trapezoid with vertices (0,0),(1,0),(1,2),(0,1).
inline Region trapezoid_region() {
  return Polygon({{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}});
}

/// Equilateral hexagon (1+sqrt3,0),(1,1),(-1,1),(-1-sqrt3,0),(-1,-1),(1,-1).
inline Region hexagon_region() {
  const Scalar s = Scalar::quad(Rational(1), Rational(1), 3);
  return Polygon({{s, Scalar(0)},
                  {Scalar(1), Scalar(1)},
                  {Scalar(-1), Scalar(1)},
                  {-s, Scalar(0)},
                  {Scalar(-1), Scalar(-1)},
                  {Scalar(1), Scalar(-1)}});
}

inline Region standard_triangle_polygon() {
  return Polygon({{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
}

}  // namespace simpson
