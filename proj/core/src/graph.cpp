#include "weightsys/graph.hpp"

#include <stdexcept>

namespace weightsys {

Graph::Graph(int vertices)
    : n_(vertices), adj_(static_cast<std::size_t>(vertices), std::vector<bool>(static_cast<std::size_t>(vertices))) {}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("graph vertex out of range");
  if (u == v) return;
  adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
}

bool Graph::has_edge(int u, int v) const { return adj_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

Graph intersection_graph(const Permutation& alpha) {
  const int c = alpha.cycle_count();
  Graph g(c);
  for (int u = 0; u < c; ++u) {
    for (int v = u + 1; v < c; ++v) {
      if (is_connected(restrict_cycles(alpha, {u, v}))) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

Poly chromatic_rec(const Graph& g, Var var) {
  const auto edges = g.edges();
  if (edges.empty()) return Poly::variable(var, static_cast<std::uint32_t>(g.vertex_count()));
  const auto [u, v] = edges.front();

  Graph deleted(g.vertex_count());
  for (const auto& [a, b] : edges) {
    if (!(a == u && b == v)) deleted.add_edge(a, b);
  }

  // Contract v into u, then drop v by shifting later labels down.
  auto relabel = [v = v, u = u](int x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  Graph contracted(g.vertex_count() - 1);
  for (const auto& [a, b] : edges) contracted.add_edge(relabel(a), relabel(b));

  return chromatic_rec(deleted, var) - chromatic_rec(contracted, var);
}

}  // namespace

Poly chromatic_polynomial(const Graph& g, Var var) { return chromatic_rec(g, var); }

}  // namespace weightsys
