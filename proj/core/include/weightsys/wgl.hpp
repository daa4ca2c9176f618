#pragma once

#include <cstdint>
#include <vector>

#include "weightsys/memo.hpp"
#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {

// coefficient * w(term)
struct Correction {
  Poly coefficient;
  Permutation term;
};

struct SwapStep {
  Permutation swapped;  // tau alpha tau with tau = (k, k+1)
  std::vector<Correction> corrections;
};

// w(alpha) = w(swapped) + sum of corrections, from the commutator of the generators at
// 0-based positions k and k+1. Throws for k out of range or an adjacent 2-cycle (k, k+1).
SwapStep gl_swap_step(const Permutation& alpha, int k);

struct ChainStep {
  int k = 0;
  Permutation before;
  std::vector<Correction> corrections;  // empty for a swap inside a 2-cycle (k, k+1)
};

struct BlockTrace {
  Permutation block;   // canonical connected core
  Permutation target;  // concatenation of standard cycles reached by the chain
  std::vector<ChainStep> steps;
};

struct EvaluationTrace {
  Permutation input;
  int stripped_fixed_points = 0;
  std::vector<BlockTrace> blocks;
  Poly value;
};

struct StrategyOptions {
  // Random adjacent inversion at each step and a random target ordering.
  bool randomized = false;
  std::uint64_t seed = 0;
};

// Universal gl weight system with values in Q[N, C_1, C_2, ...].
class GlEngine {
 public:
  GlEngine() = default;
  explicit GlEngine(StrategyOptions options) : options_(options) {}

  Poly eval(const Permutation& alpha);
  EvaluationTrace trace(const Permutation& alpha);

  MemoStore& memo() { return memo_; }
  const MemoStore& memo() const { return memo_; }

 private:
  Poly eval_core(const Permutation& canonical);
  BlockTrace walk_chain(const Permutation& canonical, Poly& value);

  StrategyOptions options_;
  MemoStore memo_;
  std::atomic<std::uint64_t> chain_counter_{0};
};

// Shared process-wide engine.
GlEngine& default_gl_engine();
Poly eval_wgl(const Permutation& alpha);

// C_k -> N^(k-1)
Poly standard_substitution(const Poly& value);

// Sum over i_1..i_m of rho(E_{i_1 i_alpha(1)}) ... rho(E_{i_m i_alpha(m)}) on the t-th tensor
// power of C^N, compared with eval_wgl(alpha) evaluated at the Casimir matrices.
// Throws std::length_error when N^t > 64 or m > 8 or N^m * N^(2t) > 2^19.
bool operator_oracle_gl(const Permutation& alpha, int n, int t);

}  // namespace weightsys
