#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "simpson/multi_index.hpp"
#include "simpson/scalar.hpp"

namespace simpson {

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class MonomialPoly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit MonomialPoly(std::size_t dimension) : n_(dimension) {}

  static MonomialPoly constant(std::size_t n, const Rational& c) {
    MonomialPoly p(n);
    p.add_term(MultiIndex::zero(n), c);
    return p;
  }
  static MonomialPoly monomial(const MultiIndex& alpha, const Rational& c = Rational(1)) {
    MonomialPoly p(alpha.dimension());
    p.add_term(alpha, c);
    return p;
  }
  static MonomialPoly variable(std::size_t n, std::size_t k) { return monomial(MultiIndex::unit(n, k)); }

  std::size_t dimension() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [alpha, c] : terms_) d = std::max(d, static_cast<int>(alpha.degree()));
    return d;
  }

  Rational coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const MultiIndex& alpha, const Rational& c) {
    if (alpha.dimension() != n_) throw DimensionMismatch("monomial dimension does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MonomialPoly& operator+=(const MonomialPoly& o) {
    check_dim(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
  }
  MonomialPoly& operator-=(const MonomialPoly& o) {
    check_dim(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
  }
  MonomialPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [alpha, c] : terms_) c *= s;
    return *this;
  }

  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
  friend MonomialPoly operator*(MonomialPoly a, const Rational& s) { return a *= s; }
  friend MonomialPoly operator*(const Rational& s, MonomialPoly a) { return a *= s; }
  MonomialPoly operator-() const { return *this * Rational(-1); }

  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
    a.check_dim(b);
    MonomialPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

  /// Exact evaluation at a point with Scalar coordinates.
  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
    Scalar sum(0);
    for (const auto& [alpha, c] : terms_) {
      Scalar term(c);
      for (std::size_t i = 0; i < n_; ++i) {
        if (alpha[i] != 0) term *= pow(point[i], alpha[i]);
      }
      sum += term;
    }
    return sum;
  }

  double evaluate(std::span<const double> point) const {
    if (point.size() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
    double sum = 0.0;
    for (const auto& [alpha, c] : terms_) {
      double term = c.to_double();
      for (std::size_t i = 0; i < n_; ++i) {
        if (alpha[i] != 0) term *= std::pow(point[i], static_cast<int>(alpha[i]));
      }
      sum += term;
    }
    return sum;
  }

  /// Highest degree first, e.g. "x^2 + 2*xy - 1/3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [alpha, c] = *it;
      if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) out += "-";
      const Rational mag = abs(c);
      if (alpha.degree() == 0) out += mag.to_string();
      else if (mag == Rational(1)) out += alpha.label();
      else out += mag.to_string() + "*" + alpha.label();
    }
    return out;
  }

 private:
  void check_dim(const MonomialPoly& o) const {
    if (o.n_ != n_) throw DimensionMismatch("polynomial dimensions differ");
  }

  std::size_t n_;
  Terms terms_;
};

inline MonomialPoly pow(const MonomialPoly& base, unsigned e) {
  MonomialPoly out = MonomialPoly::constant(base.dimension(), Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * base;
  return out;
}

}  // namespace simpson
