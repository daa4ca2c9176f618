#pragma once

#include <vector>

#include "weightsys/permutation.hpp"

namespace weightsys {

// Graph on linearly ordered vertices 0..m-1 where every vertex carries one head slot
// (2v, first index of its generator) and one tail slot (2v+1, second index). Edges pair
// slots; two-head and two-tail edges are allowed. An edge joining slots of equal type
// carries an implicit bar (i <-> N+1-i) between its two index occurrences.
class ExtendedPermGraph {
 public:
  ExtendedPermGraph() = default;
  // mate must be a fixed-point-free involution on 2m slots.
  explicit ExtendedPermGraph(std::vector<int> mate);
  static ExtendedPermGraph from_permutation(const Permutation& alpha);

  static constexpr int head(int v) { return 2 * v; }
  static constexpr int tail(int v) { return 2 * v + 1; }
  static constexpr int vertex_of(int slot) { return slot / 2; }
  static constexpr bool is_head(int slot) { return slot % 2 == 0; }

  int size() const { return static_cast<int>(mate_.size() / 2); }
  int mate(int slot) const { return mate_[static_cast<std::size_t>(slot)]; }
  const std::vector<int>& mates() const { return mate_; }

  int two_head_edges() const;
  int two_tail_edges() const;
  bool is_ordinary() const;
  // Exchanges the head and tail slot of v.
  void flip(int v);
  // Requires is_ordinary().
  Permutation to_permutation() const;

  friend bool operator==(const ExtendedPermGraph&, const ExtendedPermGraph&) = default;

 private:
  std::vector<int> mate_;
};

struct NormalizedGraph {
  int sign = 1;
  Permutation perm;
};

// Flips vertices in a left-to-right sweep until every edge joins a head to a tail; each
// flip contributes -1. With canonical_orientation, every cycle of length l >= 3 whose
// least element's successor exceeds its predecessor is reversed, contributing (-1)^l.
// Throws std::logic_error on a component with an odd number of same-type edges.
NormalizedGraph normalize_extended(const ExtendedPermGraph& g, bool canonical_orientation = false);

struct Contraction {
  bool closed_loop = false;  // the identified slots were already joined: a factor N
  ExtendedPermGraph graph;
};

// Replaces vertices k, k+1 (slots among head/tail of k and k+1) by one vertex at position k:
// its head inherits the edge of slot s, its tail the edge of slot t, and the partners of
// slots u and v are joined. {s, t, u, v} must be the four slots of k and k+1.
Contraction contract_adjacent(const ExtendedPermGraph& g, int k, int s, int t, int u, int v);

}  // namespace weightsys
