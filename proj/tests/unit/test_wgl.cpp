#include <gtest/gtest.h>

#include "support.hpp"
#include "weightsys/wgl.hpp"

namespace weightsys {
namespace {

Permutation P(const char* text) { return parse_permutation(text); }
Poly W(const char* text) { return eval_wgl(P(text)); }
Poly Q(const char* text) { return Poly::parse(text); }

TEST(Wgl, BaseCases) {
  EXPECT_EQ(eval_wgl(Permutation()), Poly(1));
  EXPECT_EQ(W("(1)"), Q("C_1"));
  EXPECT_EQ(W("(1,2)"), Q("C_2"));
  EXPECT_EQ(W("(1)(2)(3)"), Q("C_1^3"));
  EXPECT_EQ(W("(1,2,3,4,5)"), Q("C_5"));
}

TEST(Wgl, ThreeCycles) {
  EXPECT_EQ(W("(1,2,3)"), Q("C_3"));
  EXPECT_EQ(W("(1,3,2)"), Q("C_3 - N*C_2 + C_1^2"));
}

TEST(Wgl, TwoCrossingChords) {
  // From the commutator by hand: (1,3)(2,4) = (1,2)(3,4) + [E_12, E_21] E_43 terms.
  EXPECT_EQ(W("(1,3)(2,4)"), Q("C_2^2 - N*C_2 + C_1^2"));
}

TEST(Wgl, ShiftInvarianceProperty) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const Permutation a = testing::random_permutation(1 + i % 6, rng);
    EXPECT_EQ(eval_wgl(a.shift_conjugate(1 + i % 5)), eval_wgl(a)) << a.cycle_notation();
  }
}

TEST(Wgl, MultiplicativeUnderConcatenationProperty) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const Permutation a = testing::random_permutation(1 + i % 4, rng);
    const Permutation b = testing::random_permutation(1 + (i / 4) % 4, rng);
    EXPECT_EQ(eval_wgl(concatenate(a, b)), eval_wgl(a) * eval_wgl(b));
  }
}

TEST(Wgl, RandomizedChainsAgreeWithDefault) {
  std::mt19937_64 rng(43);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GlEngine engine(StrategyOptions{true, seed});
    for (int i = 0; i < 40; ++i) {
      const Permutation a = testing::random_permutation(2 + i % 5, rng);
      EXPECT_EQ(engine.eval(a), eval_wgl(a)) << a.cycle_notation() << " seed " << seed;
    }
  }
}

TEST(Wgl, SwapStepIdentityProperty) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 200; ++i) {
    const Permutation a = testing::random_permutation(2 + i % 5, rng);
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(a.size() - 1));
    if (a[k] == k + 1 && a[k + 1] == k) continue;
    const SwapStep step = gl_swap_step(a, k);
    Poly rhs = eval_wgl(step.swapped);
    for (const auto& c : step.corrections) rhs += c.coefficient * eval_wgl(c.term);
    EXPECT_EQ(eval_wgl(a), rhs) << a.cycle_notation() << " k=" << k;
  }
}

TEST(Wgl, SwapStepRejectsInvalidPositions) {
  EXPECT_THROW(gl_swap_step(P("(1,2)(3)"), 0), std::invalid_argument);
  EXPECT_THROW(gl_swap_step(P("(1,2,3)"), 2), std::out_of_range);
  EXPECT_THROW(gl_swap_step(P("(1,2,3)"), -1), std::out_of_range);
}

TEST(Wgl, TraceEndsAtStandardCycles) {
  const EvaluationTrace t = default_gl_engine().trace(P("(1,3)(2)(4,6,5)"));
  EXPECT_EQ(t.stripped_fixed_points, 1);
  EXPECT_EQ(t.value, W("(1,3)(2)(4,6,5)"));
  for (const auto& block : t.blocks) {
    for (const auto& cycle : block.target.cycles()) {
      for (std::size_t j = 1; j < cycle.size(); ++j) EXPECT_EQ(cycle[j], cycle[j - 1] + 1);
    }
  }
}

TEST(Wgl, StandardSubstitutionCountsFaces) {
  const Poly N = Poly::variable(Var::n());
  for (int m = 1; m <= 5; ++m) {
    for_each_permutation(m, [&](const Permutation& a) {
      EXPECT_EQ(standard_substitution(eval_wgl(a)), N.pow(static_cast<unsigned>(face_count(a) - 1))) << a.cycle_notation();
    });
  }
}

TEST(Wgl, OperatorOracleSmall) {
  for (int m = 1; m <= 4; ++m) {
    for_each_permutation(m, [&](const Permutation& a) {
      EXPECT_TRUE(operator_oracle_gl(a, 2, 2)) << a.cycle_notation();
      EXPECT_TRUE(operator_oracle_gl(a, 3, 1)) << a.cycle_notation();
    });
  }
}

TEST(Wgl, OracleGuard) {
  EXPECT_THROW(operator_oracle_gl(Permutation::standard_cycle(9), 2, 1), std::length_error);
  EXPECT_THROW(operator_oracle_gl(P("(1,2)"), 5, 3), std::length_error);
}

}  // namespace
}  // namespace weightsys
