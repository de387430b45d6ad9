#pragma once

// Affine images of rules, compound rules over the unit interval, the unit
// square and the standard triangle, and empirical convergence orders.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simpson/linalg.hpp"
#include "simpson/rules.hpp"

namespace simpson {

/// x -> matrix * x + offset, Rational entries.
struct AffineMap {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> offset;

  static AffineMap identity(std::size_t n) {
    AffineMap m{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))),
                std::vector<Rational>(n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i) m.matrix[i][i] = Rational(1);
    return m;
  }

  std::size_t dimension() const noexcept { return offset.size(); }

  bool is_identity() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (!offset[i].is_zero()) return false;
      for (std::size_t j = 0; j < dimension(); ++j)
        if (matrix[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
    return true;
  }

  Rational det() const {
    Matrix m(dimension(), dimension());
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j) m(i, j) = matrix[i][j];
    return determinant(m).as_rational();
  }

  Point operator()(const Point& x) const {
    Point y(dimension(), Scalar(0));
    for (std::size_t i = 0; i < dimension(); ++i) {
      Scalar acc = offset[i];
      for (std::size_t j = 0; j < dimension(); ++j) acc += Scalar(matrix[i][j]) * x[j];
      y[i] = std::move(acc);
    }
    return y;
  }
};

namespace detail {

/// Boundary of a planar region in counterclockwise order.
inline std::vector<Point> planar_outline(const Region& r) {
  if (r.is<Cube>() && r.dimension() == 2) {
    const Scalar o(0), l(1);
    return {{o, o}, {l, o}, {l, l}, {o, l}};
  }
  if ((r.is<Simplex>() && r.dimension() == 2) || r.is<Polygon>()) return vertices(r);
  throw UnsupportedRegion("affine images are supported for planar polygonal regions only, not " + r.describe());
}

}  // namespace detail

/// Image of the rule under an invertible affine map. The image region is
/// the polygon spanned by the mapped outline; weights scale by |det|.
inline CubatureRule map_rule(const CubatureRule& rule, const AffineMap& map) {
  if (map.dimension() != rule.dimension() || map.matrix.size() != map.dimension())
    throw DimensionMismatch("affine map dimension does not match the rule");
  for (const auto& row : map.matrix)
    if (row.size() != map.dimension()) throw DimensionMismatch("affine map matrix is not square");
  const Rational det = map.det();
  if (det.is_zero()) throw SingularMap("affine map has zero determinant");
  if (map.is_identity()) return rule;
  std::vector<Point> outline;
  for (const auto& v : detail::planar_outline(rule.region())) outline.push_back(map(v));
  std::vector<Point> nodes;
  std::vector<Scalar> weights;
  const Scalar scale = abs(det);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    nodes.push_back(map(rule.nodes()[i]));
    weights.push_back(rule.weights()[i] * scale);
  }
  return {Polygon(std::move(outline)), std::move(nodes), std::move(weights), rule.label()};
}

using Triangle = std::array<Point, 3>;

inline Scalar triangle_area(const Triangle& t) {
  Scalar twice = detail::cross2(t[0], t[1], t[2]);
  if (twice.sign() < 0) twice = -twice;
  return twice / Scalar(2);
}

/// Midpoint subdivision into the three corner triangles and the central
/// (inverted) one, in that order.
inline std::array<Triangle, 4> subdivide_triangle(const Triangle& t) {
  const Scalar h = Rational(1, 2);
  auto mid = [&](const Point& a, const Point& b) { return Point{(a[0] + b[0]) * h, (a[1] + b[1]) * h}; };
  const Point m01 = mid(t[0], t[1]);
  const Point m02 = mid(t[0], t[2]);
  const Point m12 = mid(t[1], t[2]);
  return {{{t[0], m01, m02}, {m01, t[1], m12}, {m02, m12, t[2]}, {m12, m02, m01}}};
}

struct CompoundEstimate {
  int level = 0;
  std::size_t cells = 0;
  double estimate = 0.0;
};

namespace detail {

/// Neumaier compensated sum, fed in a fixed order.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct FloatTriangle {
  std::array<double, 2> p0, p1, p2;
};

inline void collect_triangles(const FloatTriangle& t, int level, std::vector<FloatTriangle>& out) {
  if (level == 0) {
    out.push_back(t);
    return;
  }
  auto mid = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::array<double, 2>{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
  };
  const auto m01 = mid(t.p0, t.p1);
  const auto m02 = mid(t.p0, t.p2);
  const auto m12 = mid(t.p1, t.p2);
  collect_triangles({t.p0, m01, m02}, level - 1, out);
  collect_triangles({m01, t.p1, m12}, level - 1, out);
  collect_triangles({m02, m12, t.p2}, level - 1, out);
  collect_triangles({m12, m02, m01}, level - 1, out);
}

inline bool is_standard_triangle(const Region& r) {
  if (r.is<Simplex>()) return r.dimension() == 2;
  if (!r.is<Polygon>()) return false;
  auto a = r.as<Polygon>().vertices();
  auto b = standard_triangle_polygon().as<Polygon>().vertices();
  if (a.size() != b.size()) return false;
  auto key = [](const Point& p) { return std::make_pair(p[0].to_string(), p[1].to_string()); };
  std::sort(a.begin(), a.end(), [&](const Point& x, const Point& y) { return key(x) < key(y); });
  std::sort(b.begin(), b.end(), [&](const Point& x, const Point& y) { return key(x) < key(y); });
  return a == b;
}

}  // namespace detail

/// Applies the rule on every cell of the level-`level` subdivision and sums
/// in cell-index order. Cube(1) and Cube(2) use a uniform 2^level grid per
/// axis (row-major); the standard triangle uses recursive 4-way midpoint
/// subdivision.
inline CompoundEstimate compound_apply(const CubatureRule& rule, int level, const RealFunction& f) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  if (level > 24) throw std::invalid_argument("level is too large");
  const Region& region = rule.region();
  const std::size_t n = rule.dimension();
  std::vector<std::vector<double>> base_nodes;
  std::vector<double> base_weights;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    std::vector<double> x;
    for (const auto& c : rule.nodes()[i]) x.push_back(c.to_double());
    base_nodes.push_back(std::move(x));
    base_weights.push_back(rule.weights()[i].to_double());
  }
  detail::CompensatedSum sum;
  CompoundEstimate out;
  out.level = level;
  std::vector<double> y(n);

  if (region.is<Cube>() && n <= 2) {
    const std::size_t k = std::size_t{1} << level;
    const double h = std::ldexp(1.0, -level);
    const double scale = n == 1 ? h : h * h;
    out.cells = n == 1 ? k : k * k;
    for (std::size_t cell = 0; cell < out.cells; ++cell) {
      const std::size_t i = n == 1 ? cell : cell / k;
      const std::size_t j = n == 1 ? 0 : cell % k;
      for (std::size_t q = 0; q < base_nodes.size(); ++q) {
        y[0] = (static_cast<double>(i) + base_nodes[q][0]) * h;
        if (n == 2) y[1] = (static_cast<double>(j) + base_nodes[q][1]) * h;
        sum.add(base_weights[q] * scale * f(y));
      }
    }
    out.estimate = sum.value();
    return out;
  }

  if (detail::is_standard_triangle(region)) {
    std::vector<detail::FloatTriangle> cells;
    cells.reserve(std::size_t{1} << (2 * level));
    detail::collect_triangles({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, level, cells);
    out.cells = cells.size();
    for (const auto& t : cells) {
      const double ux = t.p1[0] - t.p0[0], uy = t.p1[1] - t.p0[1];
      const double vx = t.p2[0] - t.p0[0], vy = t.p2[1] - t.p0[1];
      const double jac = std::abs(ux * vy - uy * vx);
      for (std::size_t q = 0; q < base_nodes.size(); ++q) {
        const double s = base_nodes[q][0], r = base_nodes[q][1];
        y[0] = t.p0[0] + s * ux + r * vx;
        y[1] = t.p0[1] + s * uy + r * vy;
        sum.add(base_weights[q] * jac * f(y));
      }
    }
    out.estimate = sum.value();
    return out;
  }
  throw UnsupportedRegion("compounding is supported on cube:1, cube:2 and the standard triangle, not " +
                          region.describe());
}

/// Least-squares slope of log|error| against log h with h = 2^-level.
inline double convergence_order(const std::vector<CompoundEstimate>& estimates, double reference) {
  if (estimates.size() < 3) throw DegenerateErrors("a convergence order needs at least three levels");
  std::vector<double> xs, ys;
  double previous = INFINITY;
  for (const auto& e : estimates) {
    const double err = std::abs(e.estimate - reference);
    if (err == 0.0)
      throw DegenerateErrors("error is exactly zero at level " + std::to_string(e.level));
    if (!(err < previous))
      throw DegenerateErrors("error does not decrease at level " + std::to_string(e.level));
    previous = err;
    xs.push_back(-static_cast<double>(e.level) * std::log(2.0));
    ys.push_back(std::log(err));
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace detail {

// Gauss-Kronrod 15-point abscissae and weights on [-1,1]; the Gauss
// 7-point rule uses every other abscissa.
inline constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
double gauss_kronrod(const F& f, double a, double b, double tol, int depth) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double fl = f(c - h * kXgk[j]), fr = f(c + h * kXgk[j]);
    kronrod += kWgk[j] * (fl + fr);
    if (j % 2 == 1) gauss += kWg[j / 2] * (fl + fr);
  }
  kronrod *= h;
  gauss *= h;
  if (std::abs(kronrod - gauss) <= tol || depth >= 40) return kronrod;
  return gauss_kronrod(f, a, c, 0.5 * tol, depth + 1) + gauss_kronrod(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Reference integral by nested adaptive Gauss-Kronrod quadrature over
/// cube:1, cube:2 or the standard triangle.
inline double adaptive_integral(const Region& region, const RealFunction& f, double tol = 1e-12) {
  if (region.is<Cube>() && region.dimension() == 1) {
    return detail::gauss_kronrod([&](double x) { return f(std::array<double, 1>{x}); }, 0.0, 1.0, tol, 0);
  }
  const bool square = region.is<Cube>() && region.dimension() == 2;
  if (!square && !detail::is_standard_triangle(region))
    throw UnsupportedRegion("adaptive reference supports cube:1, cube:2 and the standard triangle, not " +
                            region.describe());
  auto inner = [&](double x) {
    const double top = square ? 1.0 : 1.0 - x;
    if (top <= 0.0) return 0.0;
    return detail::gauss_kronrod([&](double y) { return f(std::array<double, 2>{x, y}); }, 0.0, top, 0.1 * tol, 0);
  };
  return detail::gauss_kronrod(inner, 0.0, 1.0, tol, 0);
}

/// One row of a convergence study table.
struct CompoundRow {
  CompoundEstimate estimate;
  double error = 0.0;
  double ratio = NAN;  // previous error / this error
};

struct CompoundStudy {
  std::string rule;
  double reference = 0.0;
  std::vector<CompoundRow> rows;
  std::optional<double> order;
  std::string order_note;
};

inline CompoundStudy compound_study(const CubatureRule& rule, const RealFunction& f, double reference, int min_level,
                                    int max_level) {
  if (min_level < 0 || max_level < min_level) throw std::invalid_argument("invalid level range");
  CompoundStudy study;
  study.rule = rule.label();
  study.reference = reference;
  std::vector<CompoundEstimate> estimates;
  for (int level = min_level; level <= max_level; ++level) {
    CompoundRow row;
    row.estimate = compound_apply(rule, level, f);
    row.error = std::abs(row.estimate.estimate - reference);
    if (!study.rows.empty()) row.ratio = study.rows.back().error / row.error;
    estimates.push_back(row.estimate);
    study.rows.push_back(row);
  }
  try {
    study.order = convergence_order(estimates, reference);
  } catch (const DegenerateErrors& e) {
    study.order_note = e.what();
  }
  return study;
}

}  // namespace simpson
