#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "simpson/expr.hpp"

using namespace simpson;

namespace {

/// Random trees whose numbers print back to the same node: non-negative
/// integers and terminating decimals.
class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

  ExprPtr make(int depth) {
    const int pick = depth <= 0 ? uniform(0, 1) : uniform(0, 6);
    switch (pick) {
      case 0: return number();
      case 1: return Expr::variable(static_cast<std::size_t>(uniform(0, 2)));
      case 2: return Expr::negate(make(depth - 1));
      case 3: return Expr::call(static_cast<Func>(uniform(0, 4)), make(depth - 1));
      case 4: return Expr::binary('^', make(depth - 1), Expr::number(Rational(uniform(0, 4))));
      default: {
        static constexpr char kOps[] = {'+', '-', '*', '/', '^'};
        return Expr::binary(kOps[uniform(0, 4)], make(depth - 1), make(depth - 1));
      }
    }
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ExprPtr number() {
    static const std::array<long, 4> kDen{1, 4, 10, 125};
    return Expr::number(Rational(uniform(0, 40), kDen[static_cast<std::size_t>(uniform(0, 3))]));
  }

  std::mt19937_64 rng_;
};

MonomialPoly poly_of(const std::string& s, std::size_t n = 2) { return to_monomial_poly(*parse_expr(s), n); }

}  // namespace

TEST_CASE("grammar", "[expr]") {
  const auto e = parse_expr("x^2*y + 1/3");
  const auto want = Expr::binary('+', Expr::binary('*', Expr::binary('^', Expr::variable(0), Expr::number(2)),
                                                  Expr::variable(1)),
                                 Expr::binary('/', Expr::number(1), Expr::number(3)));
  CHECK(same_tree(*e, *want));

  const auto f = parse_expr("exp(x+y)");
  REQUIRE(std::holds_alternative<Expr::Call>(f->node()));
  CHECK(std::get<Expr::Call>(f->node()).func == Func::Exp);
  CHECK(std::holds_alternative<Expr::Binary>(std::get<Expr::Call>(f->node()).arg->node()));

  SECTION("power is right associative and binds tighter than unary minus") {
    CHECK(same_tree(*parse_expr("x^y^z"), *parse_expr("x^(y^z)")));
    CHECK(same_tree(*parse_expr("-x^2"), *parse_expr("-(x^2)")));
    CHECK(same_tree(*parse_expr("x-y-z"), *parse_expr("(x-y)-z")));
    CHECK(same_tree(*parse_expr("x4*x1"), *Expr::binary('*', Expr::variable(3), Expr::variable(0))));
  }
  SECTION("syntax errors carry the offset") {
    try {
      parse_expr("x^^2");
      FAIL("no exception");
    } catch (const SyntaxError& err) {
      CHECK(err.offset() == 2);
    }
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(x+1"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("foo(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("x y"), SyntaxError);
  }
}

TEST_CASE("print then parse rebuilds the tree", "[expr][property]") {
  ExprGenerator gen(1234);
  for (int i = 0; i < 200; ++i) {
    const ExprPtr e = gen.make(4);
    const std::string text = to_string(*e);
    INFO(text);
    const ExprPtr back = parse_expr(text);
    REQUIRE(same_tree(*e, *back));
    REQUIRE(same_tree(*parse_expr(to_string(*back)), *back));
  }
}

TEST_CASE("polynomial expansion", "[expr]") {
  const MonomialPoly xy = poly_of("x*y");
  CHECK(xy.terms().size() == 1);
  CHECK(xy.coefficient(MultiIndex{1, 1}) == Rational(1));

  const MonomialPoly sq = poly_of("(x+y)^2");
  CHECK(sq.coefficient(MultiIndex{2, 0}) == Rational(1));
  CHECK(sq.coefficient(MultiIndex{1, 1}) == Rational(2));
  CHECK(sq.coefficient(MultiIndex{0, 2}) == Rational(1));
  CHECK(sq.terms().size() == 3);

  CHECK(poly_of("(x - 1/2)*(x + 1/2)") == MonomialPoly::monomial(MultiIndex{2, 0}) - MonomialPoly::constant(2, Rational(1, 4)));
  CHECK(poly_of("x/4 + 0.5") == MonomialPoly::monomial(MultiIndex{1, 0}, Rational(1, 4)) + MonomialPoly::constant(2, Rational(1, 2)));
  CHECK_THROWS_AS(poly_of("sin(x)"), NotPolynomial);
  CHECK_THROWS_AS(poly_of("x^y"), NotPolynomial);
  CHECK_THROWS_AS(poly_of("1/x"), NotPolynomial);
  CHECK_THROWS_AS(poly_of("x^(1/2)"), NotPolynomial);
  CHECK_THROWS_AS(poly_of("x/0"), DivisionByZero);
  CHECK_THROWS_AS(poly_of("z", 2), DimensionMismatch);
}

TEST_CASE("evaluation", "[expr]") {
  const std::array<double, 2> at{0.25, 0.5};
  CHECK(evaluate(*parse_expr("exp(x+y)"), at) == Catch::Approx(std::exp(0.75)));
  CHECK(evaluate(*parse_expr("sqrt(x) + cos(y) - log(2)"), at) ==
        Catch::Approx(0.5 + std::cos(0.5) - std::log(2.0)));
}

TEST_CASE("float and exact application agree on polynomials", "[expr][property]") {
  const std::vector<std::string> polys{"1", "x", "x^2*y + 1/3", "(x+y)^3 - 2*x*y", "x^4 - y^4 + 0.125*x^2*y^2",
                                       "(1 - x - y)^2"};
  std::vector<CubatureRule> rules{cr4(), cr5(), cr5_conjugate(), cr6(), triangle_midedge()};
  for (unsigned n = 2; n <= 3; ++n) {
    rules.push_back(cr1(n));
    rules.push_back(cr2(n));
    rules.push_back(cr3(n));
  }
  for (const auto& rule : rules) {
    for (const auto& text : polys) {
      INFO(rule.label() << " " << text);
      const ExprPtr e = parse_expr(text);
      const double exact = apply_poly(rule, to_monomial_poly(*e, rule.dimension())).to_double();
      const double fl = apply_fn(rule, to_function(e));
      REQUIRE(std::abs(fl - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
    }
  }
}
