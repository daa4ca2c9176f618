#include <gtest/gtest.h>

#include "weightsys/matrix_oracle.hpp"

namespace weightsys {
namespace {

RationalMatrix scalar(int dim, long v) { return Rational(v) * RationalMatrix::identity(dim); }

TEST(WordSum, GlCasimirsOnDefiningRepresentation) {
  for (int n = 1; n <= 4; ++n) {
    // C_1 = sum E_ii = I, C_2 = sum E_ij E_ji = n I on C^n
    EXPECT_EQ(word_sum(Permutation::standard_cycle(1), n, 1, LieType::gl), scalar(n, 1));
    EXPECT_EQ(word_sum(Permutation::standard_cycle(2), n, 1, LieType::gl), scalar(n, n));
  }
}

TEST(WordSum, GlFirstCasimirCountsTensorFactors) {
  EXPECT_EQ(word_sum(Permutation::standard_cycle(1), 2, 3, LieType::gl), scalar(8, 3));
}

TEST(WordSum, SoFirstCasimirVanishes) {
  EXPECT_EQ(word_sum(Permutation::standard_cycle(1), 3, 1, LieType::so), RationalMatrix(3));
}

TEST(WordSum, SoQuadraticCasimirIsScalar) {
  // F_ab F_ba summed over a, b acts on C^n as 2(n-1)
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(word_sum(Permutation::standard_cycle(2), n, 1, LieType::so), scalar(n, 2 * (n - 1)));
  }
}

TEST(Evaluate, ReplacesNAndCasimirs) {
  const Poly value = Poly::parse("N*C_1 - 2");
  EXPECT_EQ(evaluate_on_tensor_power(value, 3, 1, LieType::gl), scalar(3, 1));
}

TEST(Guard, Limits) {
  EXPECT_NO_THROW(check_oracle_guard(4, 3, 1));
  EXPECT_THROW(check_oracle_guard(9, 2, 1), std::length_error);
  EXPECT_THROW(check_oracle_guard(2, 5, 3), std::length_error);
  EXPECT_THROW(check_oracle_guard(8, 5, 1), std::length_error);
}

}  // namespace
}  // namespace weightsys
