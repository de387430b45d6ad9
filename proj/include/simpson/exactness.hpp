#pragma once

// Exactness certification and the linear systems for lambda and for free
// weights.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simpson/linalg.hpp"
#include "simpson/rules.hpp"

namespace simpson {

/// L(x^alpha) - I(x^alpha), exact.
inline Scalar residual(const CubatureRule& rule, const MultiIndex& alpha) {
  return apply_monomial(rule, alpha) - moment(rule.region(), alpha);
}

/// Exactness certificate from a graded-lex monomial scan. Exactness for all
/// polynomials of degree <= `degree` follows from the monomial checks by
/// linearity.
struct ExactnessReport {
  std::string label;
  int degree = -1;
  std::optional<MultiIndex> failing;
  std::optional<Scalar> failing_residual;
  int tested = 0;
};

inline ExactnessReport exactness_degree(const CubatureRule& rule, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  ExactnessReport report;
  report.label = rule.label();
  report.tested = max_degree;
  report.degree = max_degree;
  for (int k = 0; k <= max_degree; ++k) {
    for (const auto& alpha : monomials_of_degree(rule.dimension(), static_cast<unsigned>(k))) {
      Scalar r = residual(rule, alpha);
      if (r.is_zero()) continue;
      report.degree = k - 1;
      report.failing = alpha;
      report.failing_residual = std::move(r);
      return report;
    }
  }
  return report;
}

namespace detail {

/// Divides out pi when every nonzero entry is a pi multiple. Returns false
/// if pi multiples are mixed with nonzero non-pi entries.
inline bool strip_pi(std::vector<Scalar>& entries) {
  bool any_pi = false;
  bool any_other = false;
  for (const auto& e : entries) {
    if (e.is_zero()) continue;
    (e.is_pi() ? any_pi : any_other) = true;
  }
  if (!any_pi) return true;
  if (any_other) return false;
  for (auto& e : entries) e = e.is_pi() ? Scalar(e.as_pi().coefficient()) : Scalar(0);
  return true;
}

}  // namespace detail

/// Solves lambda*(M(x^a) - T(x^a)) = I(x^a) - T(x^a) over every target.
/// lambda lives in the coefficient field (rational, or Q(sqrt d) for
/// irrational regions). On inconsistency the witness cites the pivot
/// equation and the first equation it contradicts.
inline LinearSolveOutcome solve_lambda(const CubatureRule& m, const CubatureRule& t,
                                       const std::vector<MultiIndex>& targets) {
  if (!(m.region() == t.region())) throw RegionMismatch("solve_lambda over different regions");
  const std::size_t k = targets.size();
  std::vector<Scalar> entries;
  entries.reserve(2 * k);
  for (const auto& alpha : targets) {
    const Scalar tv = apply_monomial(t, alpha);
    entries.push_back(apply_monomial(m, alpha) - tv);
    entries.push_back(moment(m.region(), alpha) - tv);
  }
  if (!detail::strip_pi(entries)) {
    Infeasible out;
    out.description = "NonRationalSystem: pi-scaled and non-pi coefficients mixed; no common lambda";
    out.inconsistency = Scalar(1);
    return out;
  }
  auto coef = [&](std::size_t i) -> const Scalar& { return entries[2 * i]; };
  auto rhs = [&](std::size_t i) -> const Scalar& { return entries[2 * i + 1]; };

  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < k; ++i) {
    if (!coef(i).is_zero()) {
      pivot = i;
      break;
    }
  }
  auto one_row = [&](std::size_t i) {
    Infeasible out;
    out.certificate.assign(k, Scalar(0));
    out.certificate[i] = Scalar(1);
    out.rows = {i};
    out.inconsistency = rhs(i);
    out.description = "equation for " + targets[i].label() + " reads 0 = " + rhs(i).to_string();
    return out;
  };
  if (!pivot) {
    for (std::size_t i = 0; i < k; ++i)
      if (!rhs(i).is_zero()) return one_row(i);
    return Underdetermined{{Scalar(0)}, 1};
  }
  const std::size_t p = *pivot;
  const Scalar lambda = rhs(p) / coef(p);
  for (std::size_t j = 0; j < k; ++j) {
    if (j == p) continue;
    if (coef(j).is_zero()) {
      if (!rhs(j).is_zero()) return one_row(j);
      continue;
    }
    const Scalar miss = coef(j) * lambda - rhs(j);
    if (miss.is_zero()) continue;
    Infeasible out;
    out.certificate.assign(k, Scalar(0));
    out.certificate[p] = coef(j);
    out.certificate[j] = -coef(p);
    out.rows = {std::min(p, j), std::max(p, j)};
    out.inconsistency = coef(j) * rhs(p) - coef(p) * rhs(j);
    out.description = targets[p].label() + " forces lambda = " + lambda.to_string() + ", but then " +
                      targets[j].label() + " is off by " + miss.to_string() + "; " + targets[j].label() +
                      " alone forces lambda = " + (rhs(j) / coef(j)).to_string();
    return out;
  }
  return UniqueSolution{{lambda}};
}

/// Rows of the moment-matching system: one row per target, one column per node.
inline Matrix weight_system(const std::vector<Point>& nodes, const std::vector<MultiIndex>& targets) {
  Matrix a(targets.size(), nodes.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const MonomialPoly mono = MonomialPoly::monomial(targets[i]);
    for (std::size_t j = 0; j < nodes.size(); ++j) a(i, j) = mono.evaluate(nodes[j]);
  }
  return a;
}

/// Free weights w with sum_j w_j x_j^a = I(x^a) for every target.
inline LinearSolveOutcome solve_weights(const Region& region, const std::vector<Point>& nodes,
                                        const std::vector<MultiIndex>& targets) {
  for (const auto& x : nodes) {
    if (x.size() != region.dimension()) throw DimensionMismatch("node dimension does not match region");
    if (!contains(region, x)) throw NodeOutsideRegion("node " + CubatureRule::point_text(x) + " is outside the region");
  }
  std::vector<Scalar> rhs;
  rhs.reserve(targets.size());
  for (const auto& alpha : targets) rhs.push_back(moment(region, alpha));
  return solve_linear(weight_system(nodes, targets), rhs);
}

/// Targets for "all monomials of degree <= k", optionally minus some.
inline std::vector<MultiIndex> degree_targets(std::size_t n, unsigned k, const std::vector<MultiIndex>& exclude = {}) {
  std::vector<MultiIndex> out;
  for (auto& alpha : monomials_up_to(n, k)) {
    if (std::find(exclude.begin(), exclude.end(), alpha) == exclude.end()) out.push_back(std::move(alpha));
  }
  return out;
}

}  // namespace simpson
