#include <doctest.h>

#include "rza/error.hpp"
#include "rza/matroid.hpp"
#include "rza/polynomial.hpp"
#include "support.hpp"

using namespace rza;
using rza::testing::random_polynomial;

TEST_CASE("rationals stay canonical") {
  const Rational r = parse_rational("6/-4");
  CHECK(to_string(r) == "-3/2");
  CHECK(r.get_den() > 0);
  CHECK(to_string(parse_rational("-0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(binomial(7, 3) == 35);
  CHECK(factorial(5) == 120);
}

TEST_CASE("variable sets") {
  const VariableSet v{"x", "y"};
  CHECK(v.index_of("y") == 1);
  CHECK_FALSE(v.contains("z"));
  CHECK(v.united(VariableSet{"y", "z"}).names() == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(VariableSet({"x", "x"}), InputError);
  CHECK(natural_less("x2", "x10"));
  CHECK(natural_less("x10", "y"));
}

TEST_CASE("parse") {
  const Polynomial p = parse("1 + 3*x2 + x1*x2");
  CHECK(p.num_terms() == 3);
  CHECK(format(p) == "1 + 3*x2 + x1*x2");
  CHECK(parse("0").is_zero());
  CHECK(format(parse("0")) == "0");
  const Polynomial q = parse("2/3*y^2 - x1");
  CHECK(q.num_terms() == 2);
  CHECK(q.coefficient({0, 2}) == Rational(2, 3));
  CHECK_THROWS_AS(parse("1 +"), ParseError);
  CHECK_THROWS_AS(parse("x^"), ParseError);
  CHECK_THROWS_AS(parse("x + w", VariableSet{"x"}), InputError);
}

TEST_CASE("arithmetic") {
  const Polynomial a = parse("1 + x1 + x2");
  const Polynomial b = parse("1 - x1 + 2*x2");
  CHECK(a * b == parse("1 + 3*x2 - x1^2 + x1*x2 + 2*x2^2"));
  CHECK(a + Polynomial() == a);
  CHECK(pow(parse("1 + y"), 2) == parse("1 + 2*y + y^2"));
  CHECK(arith(ArithOp::kPow, parse("1 + y"), Polynomial(), 3) == parse("1 + 3*y + 3*y^2 + y^3"));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == kZeroDegree);
}

TEST_CASE("evaluation and restriction") {
  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  const Polynomial p = bases_generating_poly(m1);
  const std::vector<Rational> a{1, 1, 1, 1, 1, 1, 0};
  CHECK(evaluate(p, a) == 18);
  const Polynomial e3 = elementary_symmetric(VariableSet{"a", "b", "c", "d", "e", "f", "g"}, 3);
  CHECK(evaluate(e3, std::vector<Rational>(7, Rational(1))) == 35);
  CHECK(e3.num_terms() == 35);

  const Polynomial m = parse("1 + 3*x2 + x1*x2");
  const std::vector<Rational> dir{3, 1};
  CHECK(restrict_line(m, dir) == UnivariatePolynomial({1, 3, 3}));
  CHECK(restrict_line(parse("1 - x^2"), std::vector<Rational>{1}) == UnivariatePolynomial({1, 0, -1}));
  const std::vector<Rational> zero{0, 0}, pt{2, 5};
  CHECK(restrict_line(m, zero, pt) == UnivariatePolynomial::constant(evaluate(m, pt)));
}

TEST_CASE("shift, homogenize, derivatives") {
  const std::vector<Rational> ones{1, 1};
  CHECK(shift(parse("x1*x2"), ones) == parse("1 + x1 + x2 + x1*x2"));
  const Polynomial p = bases_generating_poly(poljak_turzik(PoljakTurzik::kM1));
  const std::vector<Rational> a{1, 1, 1, 1, 1, 1, 0};
  CHECK(shift(p, a).constant_term() == 18);

  CHECK(homogenize(parse("1 + y"), 1, "s") == parse("s + y"));
  CHECK(homogenize(parse("1 + y"), 2, "s") == parse("s^2 + s*y"));
  CHECK_THROWS_AS(homogenize(parse("1 + y^2"), 1, "s"), PreconditionError);
  CHECK_THROWS_AS(homogenize(parse("1 + y"), 1, "y"), PreconditionError);

  CHECK(partial_derivative(parse("s + y"), "s") == parse("1"));
  CHECK(partial_derivative(parse("s + y"), "s", 2).is_zero());
  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  CHECK(partial_derivative(p, "x1") == bases_generating_poly(contraction(m1, std::vector<std::string>{"x1"})));
}

TEST_CASE("multi-affine part, components, support") {
  CHECK(multi_affine_part(parse("1 + x1 + x2") * parse("1 - x1 + 2*x2")) ==
        parse("1 + 3*x2 + x1*x2"));
  CHECK(multi_affine_part(parse("x^2")).is_zero());
  CHECK(homogeneous_component(parse("x*y + x - y - 1"), 1) == parse("x - y"));
  CHECK(homogeneous_component(parse("x*y + x - y - 1"), 0) == parse("-1"));
  CHECK(elementary_symmetric(VariableSet{"x1", "x2"}, 2) == parse("x1*x2"));
  CHECK(elementary_symmetric(VariableSet{"x1", "x2"}, 0) == parse("1"));
  CHECK(support(parse("1 + x1")) == std::vector<std::uint64_t>{0, 1});
  CHECK(support(parse("x1*x2")) == std::vector<std::uint64_t>{3});
  CHECK(support(bases_generating_poly(poljak_turzik(PoljakTurzik::kM1))).size() == 30);
  CHECK_THROWS_AS(support(parse("x^2")), PreconditionError);
}

TEST_CASE("property: parse(format(p)) = p") {
  std::mt19937_64 rng(101);
  const VariableSet vars{"x1", "x2", "x10", "y"};
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_polynomial(rng, vars, 6, 4);
    CHECK(parse(format(p), vars) == p);
    CHECK(parse(format(p)) == p);
  }
}

TEST_CASE("property: ring laws") {
  std::mt19937_64 rng(202);
  const VariableSet vars{"x", "y", "z"};
  for (int k = 0; k < 100; ++k) {
    const Polynomial a = random_polynomial(rng, vars, 4, 3);
    const Polynomial b = random_polynomial(rng, VariableSet{"y", "z"}, 4, 3);
    const Polynomial c = random_polynomial(rng, VariableSet{"x", "w"}, 3, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("property: homogenize then set newvar = 1") {
  std::mt19937_64 rng(303);
  const VariableSet vars{"x", "y"};
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_polynomial(rng, vars, 5, 4);
    if (p.is_zero()) continue;
    const Polynomial h = homogenize(p, static_cast<unsigned>(p.degree()), "s");
    CHECK(h.is_homogeneous());
    CHECK(substitute(h, "s", Rational(1)) == p);
  }
}

TEST_CASE("property: multi-affine part commutes with setting a variable to 0") {
  std::mt19937_64 rng(404);
  const VariableSet vars{"a", "b", "c"};
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_polynomial(rng, vars, 6, 4);
    for (const auto& v : vars.names()) {
      CHECK(substitute(multi_affine_part(p), v, Rational(0)) == multi_affine_part(substitute(p, v, Rational(0))));
    }
  }
}

TEST_CASE("property: support of a multi-affine part lies in the monomials of p") {
  std::mt19937_64 rng(505);
  const VariableSet vars{"a", "b", "c", "d"};
  for (int k = 0; k < 100; ++k) {
    const Polynomial q = multi_affine_part(random_polynomial(rng, vars, 8, 3));
    const Polynomial m = multi_affine_part(q);
    CHECK(m == q);
    for (const auto s : support(m)) {
      Monomial e(vars.size(), 0);
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = (s >> i) & 1u;
      CHECK(q.coefficient(e) != 0);
    }
  }
}
