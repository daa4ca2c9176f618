#include <gtest/gtest.h>

#include "weightsys/series.hpp"

namespace weightsys {
namespace {

const Poly N = Poly::variable(Var::n());

TEST(TruncatedSeries, ReciprocalOfGeometric) {
  const auto s = TruncatedSeries::linear(6, Poly(1), Poly(-1)).reciprocal();
  for (unsigned i = 0; i <= 6; ++i) EXPECT_EQ(s[i], Poly(1));
}

TEST(TruncatedSeries, ExpLogInverse) {
  TruncatedSeries f(7);
  f[0] = Poly(1);
  f[1] = N;
  f[2] = Poly(Rational(1, 3));
  f[5] = N * N;
  EXPECT_EQ(f.log().exp(), f);
}

TEST(TruncatedSeries, SymbolicPowerMatchesBinomialSeries) {
  // (1 + u)^N has coefficients binom(N, k)
  const auto s = TruncatedSeries::linear(5, Poly(1), Poly(1)).power(N);
  Poly binom(1);
  for (unsigned k = 0; k <= 5; ++k) {
    EXPECT_EQ(s[k], binom) << k;
    binom = binom * (N - Poly(static_cast<long>(k))) * Rational(1, k + 1);
  }
}

TEST(TruncatedSeries, IntegerPowerAgreesWithRepeatedProduct) {
  const auto base = TruncatedSeries::linear(6, Poly(1), N);
  EXPECT_EQ(base.power(Poly(3)), base * base * base);
}

TEST(TruncatedSeries, ComposeWithLinearScaling) {
  // f(2u) for f = 1/(1-u)
  const auto f = TruncatedSeries::linear(5, Poly(1), Poly(-1)).reciprocal();
  const auto g = f.compose(TruncatedSeries::linear(5, Poly(), Poly(2)));
  for (unsigned i = 0; i <= 5; ++i) EXPECT_EQ(g[i], Poly(1L << i));
}

TEST(TruncatedSeries, DerivativeShiftsCoefficients) {
  const auto f = TruncatedSeries::linear(4, Poly(1), Poly(-1)).reciprocal();
  const auto d = f.derivative();
  for (unsigned i = 0; i < 4; ++i) EXPECT_EQ(d[i], Poly(static_cast<long>(i + 1)));
}

TEST(TruncatedSeries, MismatchedOrdersThrow) {
  EXPECT_THROW(TruncatedSeries(3) * TruncatedSeries(4), std::invalid_argument);
}

}  // namespace
}  // namespace weightsys
