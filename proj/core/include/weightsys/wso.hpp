#pragma once

#include <vector>

#include "weightsys/extended_graph.hpp"
#include "weightsys/memo.hpp"
#include "weightsys/wgl.hpp"

namespace weightsys {

struct GraphCorrection {
  Poly coefficient;
  ExtendedPermGraph graph;
};

// The four correction graphs from [F_ab, F_cd] = d_bc F_ad - d_ad F_cb - d_{b d'} F_{a c'} + d_{a' c} F_{d' b}
// at 0-based positions k, k+1, before normalization.
std::vector<GraphCorrection> so_swap_graphs(const Permutation& alpha, int k);

// As gl_swap_step, with the extended correction graphs normalized (flip signs folded in).
SwapStep so_swap_step(const Permutation& alpha, int k);

// Universal so weight system with values in Q[N, C_2, C_4, ...].
class SoEngine {
 public:
  SoEngine() = default;
  explicit SoEngine(StrategyOptions options) : options_(options) {}

  Poly eval(const Permutation& alpha);
  // Value on the standard m-cycle for odd m, from w(sigma^{-1}) = -w(sigma) and a swap chain
  // from sigma^{-1} to sigma. Throws for even m.
  Poly odd_cycle_bootstrap(int m);

  MemoStore& memo() { return memo_; }
  const MemoStore& memo() const { return memo_; }

 private:
  Poly eval_core(const Permutation& canonical);
  Poly bootstrap_uncached(int m);

  StrategyOptions options_;
  MemoStore memo_;
  std::atomic<std::uint64_t> chain_counter_{0};
};

SoEngine& default_so_engine();
Poly eval_wso(const Permutation& alpha);
Poly odd_cycle_bootstrap(int m);

// Entries are +1 or -1.
using State = std::vector<int>;

// Boundary components of the surface in which legs in state -1 carry a half-twisted band.
int boundary_count_state(const Permutation& alpha, const State& s);
// Sum over states of (-1)^{#negative legs} N^{f(alpha_s) - 1}.
Poly so_state_sum(const Permutation& alpha);

// ((N-1)^k - 1 + N^2) / N
Poly so_standard_value(int k);
// C_k -> so_standard_value(k); throws std::logic_error on an odd-indexed Casimir.
Poly so_standard_substitution(const Poly& value);

// As operator_oracle_gl with F_ij = E_ij - E_{j' i'}, i' = N+1-i. Throws std::length_error
// when m > 5 or the general oracle guard is exceeded.
bool operator_oracle_so(const Permutation& alpha, int n, int t);

}  // namespace weightsys
