#pragma once

// Integrand expressions: recursive-descent parser, printer, float
// evaluation and exact lowering to MonomialPoly.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | variable | func '(' expr ')' | '(' expr ')'

#include <cctype>
#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simpson/polynomial.hpp"
#include "simpson/rules.hpp"

namespace simpson {

enum class Func { Sin, Cos, Exp, Log, Sqrt };

inline const char* func_name(Func f) {
  switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree node.
class Expr {
 public:
  struct Number {
    Rational value;
  };
  struct Variable {
    std::size_t index;  // 0-based
  };
  struct Negate {
    ExprPtr operand;
  };
  struct Binary {
    char op;  // + - * / ^
    ExprPtr lhs, rhs;
  };
  struct Call {
    Func func;
    ExprPtr arg;
  };
  using Node = std::variant<Number, Variable, Negate, Binary, Call>;

  explicit Expr(Node node) : node_(std::move(node)) {}

  static ExprPtr number(Rational v) { return std::make_shared<Expr>(Number{std::move(v)}); }
  static ExprPtr variable(std::size_t i) { return std::make_shared<Expr>(Variable{i}); }
  static ExprPtr negate(ExprPtr e) { return std::make_shared<Expr>(Negate{std::move(e)}); }
  static ExprPtr binary(char op, ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Binary{op, std::move(a), std::move(b)});
  }
  static ExprPtr call(Func f, ExprPtr e) { return std::make_shared<Expr>(Call{f, std::move(e)}); }

  const Node& node() const noexcept { return node_; }

  /// Highest variable index used plus one.
  std::size_t arity() const {
    return std::visit(
        [](const auto& n) -> std::size_t {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Number>) return 0;
          else if constexpr (std::is_same_v<T, Variable>) return n.index + 1;
          else if constexpr (std::is_same_v<T, Negate>) return n.operand->arity();
          else if constexpr (std::is_same_v<T, Binary>) return std::max(n.lhs->arity(), n.rhs->arity());
          else return n.arg->arity();
        },
        node_);
  }

 private:
  Node node_;
};

/// Structural equality.
inline bool same_tree(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, Expr::Number>) return x.value == y.value;
        else if constexpr (std::is_same_v<T, Expr::Variable>) return x.index == y.index;
        else if constexpr (std::is_same_v<T, Expr::Negate>) return same_tree(*x.operand, *y.operand);
        else if constexpr (std::is_same_v<T, Expr::Binary>)
          return x.op == y.op && same_tree(*x.lhs, *y.lhs) && same_tree(*x.rhs, *y.rhs);
        else return x.func == y.func && same_tree(*x.arg, *y.arg);
      },
      a.node());
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : s_(src) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "operator or end of input");
    return e;
  }

 private:
  static constexpr const char* kOperand = "number, variable, function, '(' or '-'";

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (eat('+')) lhs = Expr::binary('+', lhs, term());
      else if (eat('-')) lhs = Expr::binary('-', lhs, term());
      else return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (eat('*')) lhs = Expr::binary('*', lhs, unary());
      else if (eat('/')) lhs = Expr::binary('/', lhs, unary());
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (eat('-')) return Expr::negate(unary());
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (eat('^')) return Expr::binary('^', base, unary());
    return base;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, kOperand);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) throw SyntaxError(pos_, "')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw SyntaxError(pos_, kOperand);
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    const std::string_view text = s_.substr(start, pos_ - start);
    if (text == ".") throw SyntaxError(start, "digit");
    return Expr::number(Rational::parse(text));
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    static constexpr std::pair<std::string_view, Func> kFuncs[] = {
        {"sin", Func::Sin}, {"cos", Func::Cos}, {"exp", Func::Exp}, {"log", Func::Log}, {"sqrt", Func::Sqrt}};
    for (const auto& [fname, f] : kFuncs) {
      if (name != fname) continue;
      if (!eat('(')) throw SyntaxError(pos_, "'(' after " + std::string(fname));
      ExprPtr arg = expr();
      if (!eat(')')) throw SyntaxError(pos_, "')'");
      return Expr::call(f, arg);
    }
    if (name == "x") return Expr::variable(0);
    if (name == "y") return Expr::variable(1);
    if (name == "z") return Expr::variable(2);
    if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
      std::size_t idx = 0;
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
          digits = false;
          break;
        }
        idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
        if (idx > 1000000) throw SyntaxError(start, "variable index below 10^6");
      }
      if (digits) return Expr::variable(idx - 1);
    }
    throw SyntaxError(start, "variable (x, y, z, x1..xn) or function (sin, cos, exp, log, sqrt)");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Binary>) {
          if (n.op == '+' || n.op == '-') return 1;
          if (n.op == '*' || n.op == '/') return 2;
          return 4;
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return 3;
        } else {
          return 5;
        }
      },
      e.node());
}

/// Exact decimal text of a rational whose denominator has only the prime
/// factors 2 and 5; empty otherwise.
inline std::string decimal_text(const Rational& v) {
  BigInt den = v.denominator();
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return {};
  const unsigned digits = std::max(twos, fives);
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = v.numerator() * (scale / v.denominator());
  std::string text = scaled.get_str();
  if (digits == 0) return text;
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  return text;
}

}  // namespace detail

/// Parses an expression; throws SyntaxError with the byte offset.
inline ExprPtr parse_expr(std::string_view source) { return detail::ExprParser(source).parse_all(); }

/// Canonical text with minimal parentheses; parse(to_string(e)) rebuilds e.
/// Variables print as x, y, z when dimension <= 3, else x1..xn.
inline std::string to_string(const Expr& e, std::size_t dimension = 3) {
  auto wrap = [&](const Expr& child, bool paren) {
    const std::string s = to_string(child, dimension);
    return paren ? "(" + s + ")" : s;
  };
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          std::string d = detail::decimal_text(abs(n.value));
          if (d.empty()) d = "(" + abs(n.value).numerator().get_str() + "/" + abs(n.value).denominator().get_str() + ")";
          return n.value.sign() < 0 ? "(-" + d + ")" : d;
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          static constexpr const char* kShort[] = {"x", "y", "z"};
          if (dimension <= 3 && n.index < 3) return kShort[n.index];
          return "x" + std::to_string(n.index + 1);
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return "-" + wrap(*n.operand, detail::precedence(*n.operand) < 3);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          const int p = detail::precedence(e);
          if (n.op == '^') {
            return wrap(*n.lhs, detail::precedence(*n.lhs) <= 4) + "^" + wrap(*n.rhs, detail::precedence(*n.rhs) < 3);
          }
          const std::string op = (n.op == '+' || n.op == '-') ? std::string(" ") + n.op + " " : std::string(1, n.op);
          return wrap(*n.lhs, detail::precedence(*n.lhs) < p) + op + wrap(*n.rhs, detail::precedence(*n.rhs) <= p);
        } else {
          return std::string(func_name(n.func)) + "(" + to_string(*n.arg, dimension) + ")";
        }
      },
      e.node());
}

/// Float evaluation at x.
inline double evaluate(const Expr& e, std::span<const double> x) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return n.value.to_double();
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          if (n.index >= x.size())
            throw DimensionMismatch("variable x" + std::to_string(n.index + 1) + " exceeds dimension " +
                                    std::to_string(x.size()));
          return x[n.index];
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return -evaluate(*n.operand, x);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          const double a = evaluate(*n.lhs, x);
          const double b = evaluate(*n.rhs, x);
          switch (n.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            case '/': return a / b;
            default: return std::pow(a, b);
          }
        } else {
          const double a = evaluate(*n.arg, x);
          switch (n.func) {
            case Func::Sin: return std::sin(a);
            case Func::Cos: return std::cos(a);
            case Func::Exp: return std::exp(a);
            case Func::Log: return std::log(a);
            case Func::Sqrt: return std::sqrt(a);
          }
          return NAN;
        }
      },
      e.node());
}

inline RealFunction to_function(ExprPtr e) {
  return [e = std::move(e)](std::span<const double> x) { return evaluate(*e, x); };
}

/// Expanded sparse polynomial in `dimension` variables. Division is allowed
/// by nonzero constants only; exponents must be non-negative integer literals.
inline MonomialPoly to_monomial_poly(const Expr& e, std::size_t dimension) {
  return std::visit(
      [&](const auto& n) -> MonomialPoly {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return MonomialPoly::constant(dimension, n.value);
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          if (n.index >= dimension)
            throw DimensionMismatch("variable x" + std::to_string(n.index + 1) + " exceeds dimension " +
                                    std::to_string(dimension));
          return MonomialPoly::variable(dimension, n.index);
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return to_monomial_poly(*n.operand, dimension) * Rational(-1);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          if (n.op == '^') {
            const auto* lit = std::get_if<Expr::Number>(&n.rhs->node());
            if (!lit || !lit->value.is_integer() || lit->value.sign() < 0)
              throw NotPolynomial("exponent must be a non-negative integer literal");
            if (lit->value > Rational(10000)) throw NotPolynomial("exponent is too large");
            return pow(to_monomial_poly(*n.lhs, dimension), static_cast<unsigned>(lit->value.numerator().get_ui()));
          }
          MonomialPoly a = to_monomial_poly(*n.lhs, dimension);
          MonomialPoly b = to_monomial_poly(*n.rhs, dimension);
          switch (n.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            default: {
              if (b.degree() > 0) throw NotPolynomial("division by a non-constant expression");
              const Rational c = b.coefficient(MultiIndex::zero(dimension));
              if (c.is_zero()) throw DivisionByZero("division by zero in expression");
              return a * (Rational(1) / c);
            }
          }
        } else {
          throw NotPolynomial(std::string(func_name(n.func)) + "(...) is not a polynomial");
        }
      },
      e.node());
}

}  // namespace simpson
