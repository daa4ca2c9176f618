#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "weightsys/wgl.hpp"

namespace weightsys::detail {

inline Permutation swap_adjacent(const Permutation& alpha, int k) {
  std::vector<int> tau(static_cast<std::size_t>(alpha.size()));
  std::iota(tau.begin(), tau.end(), 0);
  std::swap(tau[static_cast<std::size_t>(k)], tau[static_cast<std::size_t>(k) + 1]);
  return alpha.conjugate(Permutation(std::move(tau)));
}

inline bool is_adjacent_transposition_pair(const Permutation& alpha, int k) {
  return alpha[k] == k + 1 && alpha[k + 1] == k;
}

// g with g alpha g^{-1} a concatenation of standard cycles: the cycles of alpha are laid
// out consecutively, each in its own cyclic order. Randomized layouts shuffle the cycle
// order and starting points.
inline std::vector<int> standard_conjugator(const Permutation& alpha, std::mt19937_64* rng) {
  auto cycles = alpha.cycles();
  if (rng != nullptr) {
    std::shuffle(cycles.begin(), cycles.end(), *rng);
    for (auto& c : cycles) {
      std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
      std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(pick(*rng)), c.end());
    }
  }
  std::vector<int> g(static_cast<std::size_t>(alpha.size()));
  int pos = 0;
  for (const auto& c : cycles) {
    for (int v : c) g[static_cast<std::size_t>(v)] = pos++;
  }
  return g;
}

using SwapFn = std::function<SwapStep(const Permutation&, int)>;
using TermEval = std::function<Poly(const Permutation&)>;

// Bubble-sorts g to the identity by adjacent transpositions, replacing alpha by
// tau alpha tau at each step and adding the corrections to delta. Returns the trace;
// trace.target is g alpha g^{-1} for the initial g.
inline BlockTrace walk_chain(const Permutation& alpha, std::vector<int> g, const SwapFn& swap, const TermEval& eval,
                             Poly& delta, std::mt19937_64* rng) {
  BlockTrace trace;
  trace.block = alpha;
  Permutation current = alpha;
  const int m = alpha.size();
  std::vector<int> inversions;
  while (true) {
    inversions.clear();
    for (int k = 0; k + 1 < m; ++k) {
      if (g[static_cast<std::size_t>(k)] > g[static_cast<std::size_t>(k) + 1]) inversions.push_back(k);
    }
    if (inversions.empty()) break;
    int k = inversions.front();
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
      k = inversions[pick(*rng)];
    }
    ChainStep step;
    step.k = k;
    step.before = current;
    if (is_adjacent_transposition_pair(current, k)) {
      // tau alpha tau = alpha: only the conjugator moves.
    } else {
      SwapStep s = swap(current, k);
      for (const auto& c : s.corrections) delta += c.coefficient * eval(c.term);
      step.corrections = std::move(s.corrections);
      current = std::move(s.swapped);
    }
    trace.steps.push_back(std::move(step));
    std::swap(g[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k) + 1]);
  }
  trace.target = current;
  return trace;
}

}  // namespace weightsys::detail
