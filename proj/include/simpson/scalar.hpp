#pragma once

// Exact scalar tower: rationals, elements of Q(sqrt d), rational multiples of pi.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "simpson/errors.hpp"

namespace simpson {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "p/q" and finite decimals such as "-0.125".
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

inline Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash), 10);
      BigInt den(s.substr(slash + 1), 10);
      return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t frac = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad decimal: " + s);
      if (digits[0] == '+') digits.erase(0, 1);
      BigInt num(digits, 10);
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      return Rational(num, den);
    }
    if (s[0] == '+') s.erase(0, 1);
    return Rational(BigInt(s, 10), BigInt(1));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + std::string(text));
  }
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, unsigned e) {
  Rational out(1);
  while (e) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

inline BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline bool is_squarefree(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

/// a + b*sqrt(d) with d >= 2 squarefree.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational a, Rational b, std::int64_t radicand)
      : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
    if (!is_squarefree(d_))
      throw IncompatibleScalars("radicand must be a squarefree integer >= 2, got " + std::to_string(d_));
  }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return d_; }

  QuadraticNumber conjugate() const { return {a_, -b_, d_}; }
  /// a^2 - d b^2, the field norm.
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with d b^2
    const Rational n = norm();
    return n.sign() > 0 ? sa : (n.sign() < 0 ? sb : 0);
  }

  double to_double() const {
    const double root = std::sqrt(static_cast<double>(d_));
    if (a_.sign() * b_.sign() >= 0) return a_.to_double() + b_.to_double() * root;
    // a - (-b) sqrt(d) cancels; evaluate as norm / (a - b sqrt d)
    return norm().to_double() / (a_.to_double() - b_.to_double() * root);
  }

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_;
};

/// coefficient * pi.
class PiMultiple {
 public:
  PiMultiple() = default;
  explicit PiMultiple(Rational c) : c_(std::move(c)) {}

  const Rational& coefficient() const noexcept { return c_; }
  double to_double() const { return c_.to_double() * std::numbers::pi; }

  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;

 private:
  Rational c_;
};

/// Tagged exact number. Quadratic values with zero surd part collapse to
/// Rational; zero pi multiples stay tagged so disc quantities keep one type.
class Scalar {
 public:
  using Storage = std::variant<Rational, QuadraticNumber, PiMultiple>;

  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Scalar(I v) : v_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(QuadraticNumber q) : v_(Rational(0)) {  // NOLINT(google-explicit-constructor)
    if (q.surd_part().is_zero()) {
      v_ = q.rational_part();
    } else {
      v_ = std::move(q);
    }
  }
  Scalar(PiMultiple p) : v_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  static Scalar quad(Rational a, Rational b, std::int64_t d) { return Scalar(QuadraticNumber(std::move(a), std::move(b), d)); }
  static Scalar pi(Rational c) { return Scalar(PiMultiple(std::move(c))); }

  const Storage& storage() const noexcept { return v_; }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  bool is_quadratic() const noexcept { return std::holds_alternative<QuadraticNumber>(v_); }
  bool is_pi() const noexcept { return std::holds_alternative<PiMultiple>(v_); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const QuadraticNumber& as_quadratic() const { return std::get<QuadraticNumber>(v_); }
  const PiMultiple& as_pi() const { return std::get<PiMultiple>(v_); }

  bool is_zero() const {
    if (is_rational()) return as_rational().is_zero();
    if (is_pi()) return as_pi().coefficient().is_zero();
    return false;
  }

  int sign() const {
    return std::visit(
        [](const auto& x) -> int {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PiMultiple>) {
            return x.coefficient().sign();
          } else {
            return x.sign();
          }
        },
        v_);
  }

  double to_double() const {
    return std::visit([](const auto& x) { return x.to_double(); }, v_);
  }

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Mathematical equality; never throws. Values in incompatible fields are
  /// unequal unless both are zero.
  friend bool operator==(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  Storage v_;
};

namespace detail {

inline std::string rational_text(const Rational& r) { return r.to_string(); }

[[noreturn]] inline void incompatible(const char* op, const Scalar& a, const Scalar& b) {
  throw IncompatibleScalars(std::string("cannot ") + op + " " + a.to_string() + " and " + b.to_string());
}

}  // namespace detail

inline std::string Scalar::to_string() const {
  if (is_rational()) return as_rational().to_string();
  if (is_quadratic()) {
    const auto& q = as_quadratic();
    std::ostringstream os;
    const Rational& b = q.surd_part();
    const std::string root = "sqrt(" + std::to_string(q.radicand()) + ")";
    std::string mag;
    if (abs(b) == Rational(1)) {
      mag = root;
    } else {
      mag = abs(b).to_string() + "*" + root;
    }
    if (q.rational_part().is_zero()) {
      os << (b.sign() < 0 ? "-" : "") << mag;
    } else {
      os << q.rational_part() << (b.sign() < 0 ? " - " : " + ") << mag;
    }
    return os.str();
  }
  const Rational& c = as_pi().coefficient();
  if (c.is_zero()) return "0";
  std::ostringstream os;
  if (c.sign() < 0) os << '-';
  const BigInt num = abs(c).numerator();
  const BigInt den = c.denominator();
  if (num != 1) os << num.get_str() << '*';
  os << "pi";
  if (den != 1) os << '/' << den.get_str();
  return os.str();
}

inline Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return -x;
        } else if constexpr (std::is_same_v<T, QuadraticNumber>) {
          return QuadraticNumber(-x.rational_part(), -x.surd_part(), x.radicand());
        } else {
          return PiMultiple(-x.coefficient());
        }
      },
      v_);
}

inline Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    v_ = as_rational() + o.as_rational();
    return *this;
  }
  if (is_pi() || o.is_pi()) {
    if (is_pi() && o.is_pi()) {
      v_ = PiMultiple(as_pi().coefficient() + o.as_pi().coefficient());
      return *this;
    }
    const Scalar& pi_side = is_pi() ? *this : o;
    const Scalar& other = is_pi() ? o : *this;
    if (other.is_zero()) {
      Scalar keep = pi_side;
      *this = std::move(keep);
      return *this;
    }
    if (pi_side.is_zero()) {
      Scalar keep = other;
      *this = std::move(keep);
      return *this;
    }
    detail::incompatible("add", *this, o);
  }
  // at least one quadratic, neither pi
  if (is_quadratic() && o.is_quadratic()) {
    const auto& x = as_quadratic();
    const auto& y = o.as_quadratic();
    if (x.radicand() != y.radicand()) detail::incompatible("add", *this, o);
    *this = Scalar(QuadraticNumber(x.rational_part() + y.rational_part(), x.surd_part() + y.surd_part(), x.radicand()));
    return *this;
  }
  const QuadraticNumber& q = is_quadratic() ? as_quadratic() : o.as_quadratic();
  const Rational& r = is_quadratic() ? o.as_rational() : as_rational();
  *this = Scalar(QuadraticNumber(q.rational_part() + r, q.surd_part(), q.radicand()));
  return *this;
}

inline Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    v_ = as_rational() * o.as_rational();
    return *this;
  }
  if (is_pi() || o.is_pi()) {
    if (is_pi() && o.is_pi()) detail::incompatible("multiply", *this, o);
    const Scalar& pi_side = is_pi() ? *this : o;
    const Scalar& other = is_pi() ? o : *this;
    if (other.is_rational()) {
      v_ = PiMultiple(pi_side.as_pi().coefficient() * other.as_rational());
      return *this;
    }
    if (pi_side.is_zero()) {
      v_ = PiMultiple(Rational(0));
      return *this;
    }
    detail::incompatible("multiply", *this, o);
  }
  if (is_quadratic() && o.is_quadratic()) {
    const auto& x = as_quadratic();
    const auto& y = o.as_quadratic();
    if (x.radicand() != y.radicand()) detail::incompatible("multiply", *this, o);
    const Rational d(x.radicand());
    *this = Scalar(QuadraticNumber(x.rational_part() * y.rational_part() + x.surd_part() * y.surd_part() * d,
                                   x.rational_part() * y.surd_part() + y.rational_part() * x.surd_part(),
                                   x.radicand()));
    return *this;
  }
  const QuadraticNumber& q = is_quadratic() ? as_quadratic() : o.as_quadratic();
  const Rational& r = is_quadratic() ? o.as_rational() : as_rational();
  *this = Scalar(QuadraticNumber(q.rational_part() * r, q.surd_part() * r, q.radicand()));
  return *this;
}

inline Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division of " + to_string() + " by zero");
  if (o.is_rational()) {
    return *this *= Scalar(Rational(1) / o.as_rational());
  }
  if (o.is_quadratic()) {
    if (is_pi()) {
      if (is_zero()) return *this;
      detail::incompatible("divide", *this, o);
    }
    const auto& q = o.as_quadratic();
    const Rational n = q.norm();
    const Scalar inverse(QuadraticNumber(q.rational_part() / n, -q.surd_part() / n, q.radicand()));
    return *this *= inverse;
  }
  // divisor is a nonzero pi multiple
  if (is_pi()) {
    v_ = as_pi().coefficient() / o.as_pi().coefficient();
    return *this;
  }
  if (is_zero()) return *this;
  detail::incompatible("divide", *this, o);
}

inline bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.v_.index() != b.v_.index()) return false;
  return a.v_ == b.v_;
}

inline Scalar pow(Scalar base, unsigned e) {
  Scalar out(1);
  while (e) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return out;
}

/// Exact three-way comparison. Throws IncompatibleScalars when the difference
/// is not representable.
inline int compare(const Scalar& a, const Scalar& b) { return (a - b).sign(); }

/// Conjugate in Q(sqrt d); identity on rationals and pi multiples.
inline Scalar conj(const Scalar& x) {
  if (x.is_quadratic()) return Scalar(x.as_quadratic().conjugate());
  return x;
}

namespace detail {

// "3*pi/4", "-pi", "pi/8", "1/2*pi"
inline Scalar parse_pi(const std::string& s) {
  const auto at = s.find("pi");
  std::string before = s.substr(0, at);
  std::string after = s.substr(at + 2);
  Rational coeff(1);
  if (!before.empty() && before.back() == '*') before.pop_back();
  if (before == "-") {
    coeff = Rational(-1);
  } else if (!before.empty() && before != "+") {
    coeff = Rational::parse(before);
  }
  if (!after.empty()) {
    if (after[0] != '/') throw ParseError("bad pi multiple: " + s);
    coeff /= Rational::parse(after.substr(1));
  }
  return Scalar::pi(coeff);
}

// "[a] (+|-) [b*]sqrt(d)"
inline Scalar parse_surd(const std::string& s) {
  const auto at = s.find("sqrt(");
  const auto close = s.find(')', at);
  if (close == std::string::npos || close + 1 != s.size()) throw ParseError("bad surd: " + s);
  const std::int64_t d = std::stoll(s.substr(at + 5, close - at - 5));
  std::string head = s.substr(0, at);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // split head into rational part and signed coefficient at the last +/- that
  // is not a leading sign
  Rational a(0);
  std::string coeff = head;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      a = Rational::parse(head.substr(0, i));
      coeff = head.substr(i);
      break;
    }
  }
  Rational b(1);
  if (coeff == "-") {
    b = Rational(-1);
  } else if (!coeff.empty() && coeff != "+") {
    b = Rational::parse(coeff);
  }
  return Scalar::quad(a, b, d);
}

}  // namespace detail

/// Parses the textual forms written by Scalar::to_string: "p/q", decimals,
/// "3*pi/4", "a + b*sqrt(d)".
inline Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty scalar");
  try {
    if (s.find("pi") != std::string::npos) return detail::parse_pi(s);
    if (s.find("sqrt(") != std::string::npos) return detail::parse_surd(s);
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar: " + std::string(text));
  } catch (const std::out_of_range&) {
    throw ParseError("bad scalar: " + std::string(text));
  }
}

}  // namespace simpson
