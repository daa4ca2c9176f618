#pragma once

#include <utility>
#include <vector>

#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int vertices = 0);

  int vertex_count() const { return n_; }
  // Loops and repeated edges are ignored.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<std::vector<bool>> adj_;
};

// Vertices are the cycles of alpha in alpha.cycles() order.
Graph intersection_graph(const Permutation& alpha);

// Deletion-contraction; the result is a polynomial in var.
Poly chromatic_polynomial(const Graph& g, Var var = Var::x(0));

}  // namespace weightsys
