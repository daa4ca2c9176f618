#include <gtest/gtest.h>

#include <random>

#include "weightsys/schur.hpp"
#include "weightsys/wgl.hpp"

namespace weightsys {
namespace {

Poly Q(const char* text) { return Poly::parse(text); }

TEST(BasisTable, LowOrderSubstitutions) {
  const BasisTable& t = basis_table(3);
  EXPECT_EQ(t.c_of_s[1], Q("S_1"));
  EXPECT_EQ(t.c_of_s[2], Q("2*S_2 - S_1^2 - 1/12*(N-1)*N*(N+1)"));
  EXPECT_EQ(t.c_of_s[3], Q("3*S_3 - 3*S_1*S_2 + S_1^3 + N*S_2 - 1/2*(N+1)*S_1^2 - 1/4*(N-1)*(N+1)*S_1 - 1/24*(N-1)*N^2*(N+1)"));
}

TEST(BasisTable, RoundTrip) {
  const BasisTable& t = basis_table(8);
  for (std::uint32_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(to_casimir_basis(t.c_of_s[k]), Poly::variable(Var::c(k)));
    EXPECT_EQ(to_schur_basis(t.s_of_c[k]), Poly::variable(Var::s(k)));
  }
}

TEST(BasisTable, CachedTableGrows) {
  EXPECT_GE(basis_table(10).order, 10U);
  EXPECT_EQ(basis_table(10).c_of_s[2], build_basis_table(2).c_of_s[2]);
}

TEST(PerelomovPopov, RandomSamples) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (unsigned k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.emplace_back(num(rng), den(rng));
        for (auto& v : x) v.canonicalize();
        EXPECT_TRUE(pp_oracle(k, x)) << "k=" << k << " N=" << n;
      }
    }
  }
}

TEST(PerelomovPopov, TrivialRepresentation) {
  // x_i = (N + 1)/2 - i gives the trivial representation: all Casimirs vanish
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rational> x;
    for (int i = 1; i <= n; ++i) x.emplace_back(Rational(n + 1, 2) - i);
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(pp_casimir(k, x), 0) << n << " " << k;
  }
}

TEST(InverseDuality, SmallPermutations) {
  for (int m = 1; m <= 4; ++m) {
    for_each_permutation(m, [&](const Permutation& a) { EXPECT_TRUE(inverse_sign_check(a)) << a.cycle_notation(); });
  }
}

TEST(InverseDuality, ChordDiagramsHaveEvenOddCount) {
  for_each_permutation_of_type(Partition({2, 2}), [&](const Permutation& a) {
    for (const auto& [mono, c] : to_schur_basis(eval_wgl(a)).terms()) {
      unsigned odd = 0;
      for (const auto& [v, e] : mono.factors()) {
        if (v.kind() == VarKind::S && v.index() % 2 == 1) odd += e;
      }
      EXPECT_EQ(odd % 2, 0U);
    }
  });
}

TEST(Averaging, SecondAverage) { EXPECT_EQ(to_schur_basis(average_wgl(2)), Q("S_2 - 1/24*(N-1)*N*(N+1)")); }

TEST(Averaging, StructureUpToFive) {
  for (int m = 1; m <= 5; ++m) {
    const auto gaps = schur_average(m);
    EXPECT_EQ(gaps.front().first, 0);
    EXPECT_EQ(gaps.front().second, Poly(1));
    for (const auto& [gap, coeff] : gaps) {
      EXPECT_EQ(gap % 2, 0);
      const auto q = averaging_quotient(m, gap, coeff);
      ASSERT_TRUE(q.has_value()) << m << " " << gap;
      EXPECT_EQ(q->degree_in(Var::n()), static_cast<unsigned>(gap / 2));
      if (gap == 2) EXPECT_EQ(*q, Q("1/24*N - 1/24"));
    }
  }
  EXPECT_THROW(average_wgl(7), BoundExceeded);
}

TEST(Stirling, FirstKindAndJucys) {
  const std::vector<Integer> row = stirling_first_kind(5);
  const std::vector<Integer> expected = {0, 24, 50, 35, 10, 1};
  EXPECT_EQ(row, expected);
  for (int m = 1; m <= 6; ++m) EXPECT_TRUE(jucys_stirling_check(m)) << m;
}

TEST(Fit, ReportsMatchingCandidate) {
  const FitReport r = averaging_closed_form_fit(6);
  EXPECT_TRUE(r.m_independent);
  int matches = 0;
  for (const auto& c : r.candidates) {
    if (!c.matches) continue;
    ++matches;
    EXPECT_EQ(c.exponent_sign, -1);
    EXPECT_FALSE(c.factorial);
    EXPECT_TRUE(c.alternating);
  }
  EXPECT_EQ(matches, 1);
  ASSERT_EQ(r.claims.size(), 3U);
  EXPECT_TRUE(r.claims[0].matches);
  EXPECT_EQ(r.claims[1].ratio, Rational(24));
  EXPECT_EQ(r.claims[2].ratio, Rational(720));
}

}  // namespace
}  // namespace weightsys
