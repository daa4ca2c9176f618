#include <gtest/gtest.h>

#include "support.hpp"
#include "weightsys/relations.hpp"
#include "weightsys/wgl.hpp"
#include "weightsys/wso.hpp"

namespace weightsys {
namespace {

Permutation P(const char* text) { return parse_permutation(text); }

Rational coefficient_sum(const DiagramCombo& c) {
  Rational s = 0;
  for (const auto& [p, q] : c.terms()) s += q;
  return s;
}

TEST(InsertLeg, Positions) {
  // (1,3)(2) + new leg at gap 1 between 1 and 3 in the cycle
  EXPECT_EQ(insert_leg(P("(1,3)(2)"), 1, 0, 2), P("(1,2,4)(3)"));
  EXPECT_EQ(insert_leg(P("(1,2)"), 2, -1, -1), P("(1,2)(3)"));
  EXPECT_EQ(insert_leg(P("(1,2)"), 0, 1, 0), P("(1,2,3)"));
}

TEST(OneHyperArc, BalancedAndTypePreserving) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const Permutation a = testing::random_permutation(3 + i % 4, rng);
    const int leg = static_cast<int>(rng() % static_cast<std::uint64_t>(a.size()));
    const DiagramCombo e = one_hyper_arc_element(a, leg);
    EXPECT_EQ(coefficient_sum(e), 0);
    for (const auto& [p, q] : e.terms()) EXPECT_EQ(cycle_type(p), cycle_type(a));
  }
}

TEST(TwoHyperArc, BalancedAndRejectsOwnCycle) {
  const Permutation a = P("(1,4)(2,5,3)");
  const DiagramCombo e = two_hyper_arc_element(a, 0, 1);
  EXPECT_FALSE(e.empty());
  EXPECT_EQ(coefficient_sum(e), 0);
  EXPECT_THROW(two_hyper_arc_element(a, 0, 0), std::invalid_argument);
}

TEST(DiagramCombo, NormalizedIsScaleInvariant) {
  DiagramCombo c;
  c.add(P("(1,2,3)"), Rational(2));
  c.add(P("(1,3,2)"), Rational(-4));
  DiagramCombo d;
  d.add(c, Rational(-3, 2));
  EXPECT_EQ(c.normalized(), d.normalized());
  EXPECT_EQ(c.normalized().terms().begin()->second, 1);
}

TEST(DiagramCombo, ApplyIsLinear) {
  DiagramCombo c;
  c.add(P("(1,2)"), Rational(3));
  c.add(P("(1)(2)"), Rational(-1));
  EXPECT_EQ(c.apply(eval_wgl), Poly::parse("3*C_2 - C_1^2"));
}

TEST(CheckFunctional, WeightSystemsVanish) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_TRUE(check_functional(eval_wgl, m).ok()) << m;
    EXPECT_TRUE(check_functional(face_count_monomial, m).ok()) << m;
  }
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(check_functional(eval_wso, m).ok()) << m;
}

TEST(CheckFunctional, GenusIsAGeneralizedWeightSystem) {
  const auto genus = [](const Permutation& p) { return Poly::variable(Var::aux(0), static_cast<std::uint32_t>(euler_genus(p))); };
  for (int m = 1; m <= 5; ++m) EXPECT_TRUE(check_functional(genus, m).ok()) << m;
}

TEST(CheckFunctional, DetectsNonWeightSystems) {
  const auto cycles = [](const Permutation& p) { return Poly::variable(Var::aux(0), static_cast<std::uint32_t>(p.cycle_count())); };
  const auto first_image = [](const Permutation& p) { return Poly(static_cast<long>(p[0])); };
  EXPECT_FALSE(check_functional(first_image, 3).ok());
  // cycle count is constant on relation elements (all terms share a cycle type)
  EXPECT_TRUE(check_functional(cycles, 4).ok());
}

TEST(CheckFunctional, ThreadsDoNotChangeResults) {
  const auto a = check_functional(eval_wgl, 5, {}, 1);
  const auto b = check_functional(eval_wgl, 5, {}, 3);
  EXPECT_EQ(a.elements, b.elements);
  EXPECT_EQ(a.violations.size(), b.violations.size());
}

TEST(EnumerateRelations, BoundAndTypeFilter) {
  RelationOptions options;
  options.bound = 4;
  EXPECT_THROW(enumerate_relations(5, options), BoundExceeded);
  options.cycle_type = Partition({2, 2});
  for (const auto& r : enumerate_relations(4, options)) {
    for (const auto& [p, q] : r.combo.terms()) EXPECT_EQ(cycle_type(p), Partition({2, 2}));
  }
}

}  // namespace
}  // namespace weightsys
