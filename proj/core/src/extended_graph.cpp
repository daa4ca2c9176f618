#include "weightsys/extended_graph.hpp"

#include <stdexcept>

namespace weightsys {

ExtendedPermGraph::ExtendedPermGraph(std::vector<int> mate) : mate_(std::move(mate)) {
  if (mate_.size() % 2 != 0) throw std::invalid_argument("extended graph needs an even slot count");
  const int n = static_cast<int>(mate_.size());
  for (int s = 0; s < n; ++s) {
    const int t = mate_[static_cast<std::size_t>(s)];
    if (t < 0 || t >= n || t == s || mate_[static_cast<std::size_t>(t)] != s) {
      throw std::invalid_argument("extended graph mate map is not a fixed-point-free involution");
    }
  }
}

ExtendedPermGraph ExtendedPermGraph::from_permutation(const Permutation& alpha) {
  std::vector<int> mate(static_cast<std::size_t>(2 * alpha.size()));
  for (int v = 0; v < alpha.size(); ++v) {
    mate[static_cast<std::size_t>(tail(v))] = head(alpha[v]);
    mate[static_cast<std::size_t>(head(alpha[v]))] = tail(v);
  }
  return ExtendedPermGraph(std::move(mate));
}

int ExtendedPermGraph::two_head_edges() const {
  int count = 0;
  for (int s = 0; s < static_cast<int>(mate_.size()); ++s) {
    if (is_head(s) && is_head(mate(s)) && s < mate(s)) ++count;
  }
  return count;
}

int ExtendedPermGraph::two_tail_edges() const {
  int count = 0;
  for (int s = 0; s < static_cast<int>(mate_.size()); ++s) {
    if (!is_head(s) && !is_head(mate(s)) && s < mate(s)) ++count;
  }
  return count;
}

bool ExtendedPermGraph::is_ordinary() const {
  for (int s = 0; s < static_cast<int>(mate_.size()); ++s) {
    if (is_head(s) == is_head(mate(s))) return false;
  }
  return true;
}

void ExtendedPermGraph::flip(int v) {
  const int h = head(v);
  const int t = tail(v);
  const int mh = mate(h);
  const int mt = mate(t);
  if (mh == t) return;  // a loop on v is unchanged
  mate_[static_cast<std::size_t>(h)] = mt;
  mate_[static_cast<std::size_t>(t)] = mh;
  mate_[static_cast<std::size_t>(mt)] = h;
  mate_[static_cast<std::size_t>(mh)] = t;
}

Permutation ExtendedPermGraph::to_permutation() const {
  if (!is_ordinary()) throw std::logic_error("extended graph is not an ordinary permutation graph");
  std::vector<int> map(static_cast<std::size_t>(size()));
  for (int v = 0; v < size(); ++v) map[static_cast<std::size_t>(v)] = vertex_of(mate(tail(v)));
  return Permutation(std::move(map));
}

NormalizedGraph normalize_extended(const ExtendedPermGraph& g, bool canonical_orientation) {
  ExtendedPermGraph work = g;
  int sign = 1;
  std::vector<bool> visited(static_cast<std::size_t>(g.size()), false);
  for (int start = 0; start < g.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    visited[static_cast<std::size_t>(start)] = true;
    int current = start;
    while (true) {
      const int next_slot = work.mate(ExtendedPermGraph::tail(current));
      const int next = ExtendedPermGraph::vertex_of(next_slot);
      if (next == start) {
        if (!ExtendedPermGraph::is_head(next_slot)) {
          throw std::logic_error("extended graph component cannot be normalized");
        }
        break;
      }
      if (!ExtendedPermGraph::is_head(next_slot)) {
        work.flip(next);
        sign = -sign;
      }
      visited[static_cast<std::size_t>(next)] = true;
      current = next;
    }
  }
  Permutation perm = work.to_permutation();
  if (canonical_orientation) {
    std::vector<int> map = perm.images();
    const Permutation inv = perm.inverse();
    for (const auto& cycle : perm.cycles()) {
      const int l = static_cast<int>(cycle.size());
      if (l < 3) continue;
      const int least = cycle.front();
      if (perm[least] > inv[least]) {
        for (int v : cycle) map[static_cast<std::size_t>(v)] = inv[v];
        if (l % 2 != 0) sign = -sign;
      }
    }
    perm = Permutation(std::move(map));
  }
  return NormalizedGraph{sign, std::move(perm)};
}

Contraction contract_adjacent(const ExtendedPermGraph& g, int k, int s, int t, int u, int v) {
  const int m = g.size();
  if (k < 0 || k + 1 >= m) throw std::out_of_range("contract_adjacent: position out of range");
  const int lo = ExtendedPermGraph::head(k);
  const int hi = ExtendedPermGraph::tail(k + 1);
  auto in_pair = [&](int slot) { return slot >= lo && slot <= hi; };
  if (!in_pair(s) || !in_pair(t) || !in_pair(u) || !in_pair(v)) {
    throw std::invalid_argument("contract_adjacent: slots must belong to k and k+1");
  }
  auto map_slot = [&](int slot) {
    if (slot == s) return ExtendedPermGraph::head(k);
    if (slot == t) return ExtendedPermGraph::tail(k);
    const int vert = ExtendedPermGraph::vertex_of(slot);
    const int offset = slot % 2;
    return 2 * (vert < k ? vert : vert - 1) + offset;
  };

  Contraction result;
  result.closed_loop = g.mate(u) == v;
  std::vector<int> mate(static_cast<std::size_t>(2 * (m - 1)));
  for (int x = 0; x < 2 * m; ++x) {
    if (x == u || x == v) continue;
    int partner = g.mate(x);
    if (!result.closed_loop) {
      if (partner == u) {
        partner = g.mate(v);
      } else if (partner == v) {
        partner = g.mate(u);
      }
    }
    mate[static_cast<std::size_t>(map_slot(x))] = map_slot(partner);
  }
  result.graph = ExtendedPermGraph(std::move(mate));
  return result;
}

}  // namespace weightsys
