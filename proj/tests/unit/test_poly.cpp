#include <gtest/gtest.h>

#include "support.hpp"
#include "weightsys/errors.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {
namespace {

const Poly N = Poly::variable(Var::n());
Poly C(std::uint32_t k) { return Poly::variable(Var::c(k)); }

TEST(Var, NamesRoundTrip) {
  for (Var v : {Var::n(), Var::c(3), Var::s(12), Var::p(2), Var::x(0), Var::aux(4)}) {
    EXPECT_EQ(Var::parse(v.name()), v) << v.name();
  }
  EXPECT_THROW(Var::parse("C_"), ParseError);
  EXPECT_THROW(Var::parse("Q_1"), ParseError);
}

TEST(Poly, PrintsGradedLexOrder) {
  const Poly p = C(3) - N * C(2) + C(1) * C(1);
  EXPECT_EQ(p.to_string(), "-N*C_2 + C_1^2 + C_3");
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ(Poly(Rational(-1, 2)).to_string(), "-1/2");
}

TEST(Poly, ParseHandlesParenthesesAndPowers) {
  EXPECT_EQ(Poly::parse("(N-1)*(N+1)"), N * N - Poly(1));
  EXPECT_EQ(Poly::parse("2*C_2^2 - 1/12*N"), C(2).pow(2) * Rational(2) - N * Rational(1, 12));
  EXPECT_EQ(Poly::parse("-(C_1 + C_2)^2"), -(C(1) + C(2)).pow(2));
  EXPECT_THROW(Poly::parse("C_1 +"), ParseError);
  EXPECT_THROW(Poly::parse("(N"), ParseError);
}

TEST(Poly, TextAndJsonRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly p = testing::random_poly(rng) * Rational(1, 1 + i % 5);
    EXPECT_EQ(Poly::parse(p.to_string()), p);
    EXPECT_EQ(Poly::from_json(p.to_json()), p);
  }
}

TEST(Poly, RingAxiomsProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Poly a = testing::random_poly(rng);
    const Poly b = testing::random_poly(rng);
    const Poly c = testing::random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, SubstituteIsSimultaneous) {
  const Poly p = C(1) * C(2).pow(2);
  const Poly swapped = p.substitute({{Var::c(1), C(2)}, {Var::c(2), C(1)}});
  EXPECT_EQ(swapped, C(2) * C(1).pow(2));
}

TEST(Poly, EvaluateAgreesWithConstantSubstitution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Poly p = testing::random_poly(rng);
    std::map<Var, Rational> values{{Var::n(), Rational(3, 2)}, {Var::c(1), 2}, {Var::c(2), -1}, {Var::c(3), Rational(1, 3)}};
    std::map<Var, Poly> rules;
    for (const auto& [v, q] : values) rules[v] = Poly(q);
    const Poly sub = p.substitute(rules);
    ASSERT_TRUE(sub.is_constant());
    EXPECT_EQ(sub.constant_term(), p.evaluate(values));
  }
}

TEST(Poly, DegreesAndCoefficients) {
  const Poly p = N.pow(3) * C(2) + N * C(2).pow(2) - Poly(4);
  EXPECT_EQ(p.degree_in(Var::n()), 3U);
  EXPECT_EQ(p.total_degree(), 4U);
  EXPECT_EQ(p.coefficient_of(Var::n(), 1), C(2).pow(2));
  EXPECT_EQ(p.coefficient_of(Var::n(), 0), Poly(-4));
  EXPECT_EQ(p.variables(), (std::set<Var>{Var::n(), Var::c(2)}));
}

TEST(Poly, LaurentCoefficient) {
  const Poly p = N.pow(3) * C(3) + N * C(2) + C(1);
  EXPECT_EQ(laurent_coefficient(p, Var::n(), -1, 0), C(2));
  EXPECT_EQ(laurent_coefficient(p, Var::n(), -3, 0), C(3));
  EXPECT_EQ(laurent_coefficient(p, Var::n(), -2, 0), Poly());
}

TEST(Poly, DivideByLinear) {
  const Poly p = (N - Poly(1)) * (N + Poly(2)) * C(1);
  EXPECT_EQ(divide_by_linear(p, Var::n(), 1), (N + Poly(2)) * C(1));
  EXPECT_EQ(divide_by_linear(p, Var::n(), -2), (N - Poly(1)) * C(1));
  EXPECT_FALSE(divide_by_linear(p, Var::n(), 3).has_value());
}

TEST(Poly, FallingFactorial) {
  EXPECT_EQ(falling_factorial(Var::n(), 3, 2), (N + Poly(3)) * (N + Poly(2)));
  EXPECT_EQ(falling_factorial(Var::n(), 0, 0), Poly(1));
}

}  // namespace
}  // namespace weightsys
