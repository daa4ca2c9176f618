#include <gtest/gtest.h>

#include <random>

#include "weightsys/graph.hpp"

namespace weightsys {
namespace {

// Number of proper colorings with k colors by exhaustive search.
long count_colorings(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  long total = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      ++total;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(g.has_edge(u, v) && color[static_cast<std::size_t>(u)] == c);
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      go(v + 1);
    }
  };
  go(0);
  return total;
}

TEST(ChromaticPolynomial, SmallGraphs) {
  const Poly x = Poly::variable(Var::x(0));
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  EXPECT_EQ(chromatic_polynomial(triangle), x * (x - Poly(1)) * (x - Poly(2)));
  EXPECT_EQ(chromatic_polynomial(Graph(2)), x * x);
  EXPECT_EQ(chromatic_polynomial(Graph(0)), Poly(1));
}

TEST(ChromaticPolynomial, AgreesWithColoringCountsProperty) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    Graph g(n);
    std::bernoulli_distribution edge(0.45);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) g.add_edge(u, v);
      }
    }
    const Poly chi = chromatic_polynomial(g);
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(chi.evaluate({{Var::x(0), Rational(k)}}), Rational(count_colorings(g, k)));
    }
  }
}

TEST(IntersectionGraph, InterlacingCycles) {
  const Graph crossing = intersection_graph(parse_permutation("(1,3)(2,4)"));
  EXPECT_TRUE(crossing.has_edge(0, 1));
  const Graph nested = intersection_graph(parse_permutation("(1,4)(2,3)"));
  EXPECT_EQ(nested.edge_count(), 0U);
  const Graph hyper = intersection_graph(parse_permutation("(1,3,5)(2,4)(6)"));
  EXPECT_TRUE(hyper.has_edge(0, 1));
  EXPECT_FALSE(hyper.has_edge(0, 2));
  EXPECT_FALSE(hyper.has_edge(1, 2));
}

TEST(IntersectionGraph, EdgeIffRestrictionConnected) {
  for (int m = 2; m <= 6; ++m) {
    for_each_permutation(m, [&](const Permutation& a) {
      const Graph g = intersection_graph(a);
      for (int i = 0; i < a.cycle_count(); ++i) {
        for (int j = i + 1; j < a.cycle_count(); ++j) {
          EXPECT_EQ(g.has_edge(i, j), is_connected(restrict_cycles(a, {i, j})));
        }
      }
    });
  }
}

}  // namespace
}  // namespace weightsys
