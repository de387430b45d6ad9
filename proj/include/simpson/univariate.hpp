#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "simpson/scalar.hpp"

namespace simpson {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  UnivariatePoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UnivariatePoly x() { return {Rational(0), Rational(1)}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  Rational operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UnivariatePoly& operator+=(const UnivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UnivariatePoly& operator-=(const UnivariatePoly& o) { return *this += o * Rational(-1); }

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const Rational& s) {
    std::vector<Rational> out(a.c_);
    for (auto& v : out) v *= s;
    return UnivariatePoly(std::move(out));
  }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(out));
  }

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  /// Discriminant of a quadratic.
  Rational discriminant() const {
    if (degree() != 2) throw std::invalid_argument("discriminant defined here for quadratics only");
    return c_[1] * c_[1] - Rational(4) * c_[2] * c_[0];
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += c_[i].sign() < 0 ? " - " : " + ";
      else if (c_[i].sign() < 0) out += "-";
      const Rational mag = abs(c_[i]);
      if (i == 0) {
        out += mag.to_string();
        continue;
      }
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> out;
  for (BigInt k = 1; k * k <= v; ++k) {
    if (v % k == 0) {
      out.push_back(k);
      if (k * k != v) out.push_back(v / k);
    }
  }
  return out;
}

}  // namespace detail

/// All distinct rational roots, ascending, via the rational root theorem.
inline std::vector<Rational> rational_roots(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has every number as a root");
  // clear denominators
  BigInt lcm_den(1);
  for (const auto& c : p.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
  std::vector<BigInt> ints;
  for (const auto& c : p.coefficients()) ints.push_back((c * Rational(lcm_den, BigInt(1))).numerator());
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const BigInt& a0 = ints[low];
  const BigInt& an = ints.back();
  if (ints.size() - low > 1) {
    for (const auto& num : detail::positive_divisors(a0)) {
      for (const auto& den : detail::positive_divisors(an)) {
        for (int s : {1, -1}) {
          const Rational cand(BigInt(num * s), den);
          if (p(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace simpson
