#include "weightsys/wso.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "chain.hpp"
#include "weightsys/matrix_oracle.hpp"

namespace weightsys {

namespace {

using G = ExtendedPermGraph;

GraphCorrection contraction_term(const ExtendedPermGraph& graph, int k, int s, int t, int u, int v, long sign) {
  Contraction c = contract_adjacent(graph, k, s, t, u, v);
  Poly coeff(sign);
  if (c.closed_loop) coeff *= Poly::variable(Var::n());
  return GraphCorrection{std::move(coeff), std::move(c.graph)};
}

}  // namespace

std::vector<GraphCorrection> so_swap_graphs(const Permutation& alpha, int k) {
  if (k < 0 || k + 1 >= alpha.size()) throw std::out_of_range("swap position out of range");
  const ExtendedPermGraph graph = ExtendedPermGraph::from_permutation(alpha);
  // F_ab at k, F_cd at k+1: a = head(k), b = tail(k), c = head(k+1), d = tail(k+1).
  const int a = G::head(k);
  const int b = G::tail(k);
  const int c = G::head(k + 1);
  const int d = G::tail(k + 1);
  return {
      contraction_term(graph, k, a, d, b, c, 1),
      contraction_term(graph, k, c, b, a, d, -1),
      contraction_term(graph, k, a, c, b, d, -1),
      contraction_term(graph, k, d, b, a, c, 1),
  };
}

SwapStep so_swap_step(const Permutation& alpha, int k) {
  if (k >= 0 && k + 1 < alpha.size() && detail::is_adjacent_transposition_pair(alpha, k)) {
    throw std::invalid_argument("swap inside a 2-cycle (k, k+1) is vacuous");
  }
  SwapStep step;
  for (auto& gc : so_swap_graphs(alpha, k)) {
    NormalizedGraph n = normalize_extended(gc.graph);
    step.corrections.push_back(Correction{gc.coefficient * Rational(n.sign), std::move(n.perm)});
  }
  step.swapped = detail::swap_adjacent(alpha, k);
  return step;
}

Poly SoEngine::eval(const Permutation& alpha) {
  if (alpha.empty()) return Poly(1);
  if (alpha.fixed_point_count() > 0) return Poly();
  Poly value(1);
  for (const auto& block : interval_decomposition(alpha)) {
    value *= eval_core(canonical_cyclic_class(block).canonical);
    if (value.is_zero()) break;
  }
  return value;
}

Poly SoEngine::eval_core(const Permutation& canonical) {
  return memo_.get_or_compute(canonical, [&] {
    const int m = canonical.size();
    if (canonical.is_standard_cycle()) {
      return m % 2 == 0 ? Poly::variable(Var::c(static_cast<std::uint32_t>(m))) : bootstrap_uncached(m);
    }
    std::mt19937_64 rng(options_.seed ^ (0x9e3779b97f4a7c15ULL * (chain_counter_.fetch_add(1) + 1)));
    std::mt19937_64* r = options_.randomized ? &rng : nullptr;
    Poly delta;
    const BlockTrace trace = detail::walk_chain(
        canonical, detail::standard_conjugator(canonical, r), so_swap_step,
        [this](const Permutation& p) { return eval(p); }, delta, r);
    Poly product(1);
    for (const auto& cycle : trace.target.cycles()) {
      product *= eval_core(Permutation::standard_cycle(static_cast<int>(cycle.size())));
    }
    return delta + product;
  });
}

Poly SoEngine::bootstrap_uncached(int m) {
  if (m == 1) return Poly();
  const Permutation reversed = Permutation::standard_cycle(m).inverse();
  std::vector<int> g(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)] = m - 1 - i;
  Poly delta;
  const BlockTrace trace = detail::walk_chain(
      reversed, std::move(g), so_swap_step, [this](const Permutation& p) { return eval(p); }, delta, nullptr);
  if (!trace.target.is_standard_cycle()) throw std::logic_error("bootstrap chain did not reach the standard cycle");
  // w(sigma^{-1}) = w(sigma) + delta and w(sigma^{-1}) = -w(sigma)
  return delta * Rational(-1, 2);
}

Poly SoEngine::odd_cycle_bootstrap(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("odd_cycle_bootstrap needs odd m");
  return eval_core(Permutation::standard_cycle(m));
}

SoEngine& default_so_engine() {
  static SoEngine engine;
  return engine;
}

Poly eval_wso(const Permutation& alpha) { return default_so_engine().eval(alpha); }

Poly odd_cycle_bootstrap(int m) { return default_so_engine().odd_cycle_bootstrap(m); }

namespace {

// Union-find over 2m signed literals: node 2x is x, node 2x+1 is its bar.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(int vars) : parent_(static_cast<std::size_t>(2 * vars)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    parent_[static_cast<std::size_t>(find(a))] = find(b);
    parent_[static_cast<std::size_t>(find(a ^ 1))] = find(b ^ 1);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int boundary_count_state(const Permutation& alpha, const State& s) {
  const int m = alpha.size();
  if (static_cast<int>(s.size()) != m) throw std::invalid_argument("state length must equal m");
  // Leg j contributes E_{x_j, x_alpha(j)} in state +1 and E_{x'_alpha(j), x'_j} in state -1;
  // the matrix product closes up when the second index of leg j equals the first of leg j+1.
  auto first = [&](int j) { return s[static_cast<std::size_t>(j)] > 0 ? 2 * j : 2 * alpha[j] + 1; };
  auto second = [&](int j) { return s[static_cast<std::size_t>(j)] > 0 ? 2 * alpha[j] : 2 * j + 1; };
  SignedUnionFind uf(m);
  for (int j = 0; j < m; ++j) uf.unite(second(j), first((j + 1) % m));
  // A component is a pair of classes {K, bar K}.
  std::set<std::pair<int, int>> components;
  for (int x = 0; x < m; ++x) {
    const int r = uf.find(2 * x);
    const int rbar = uf.find(2 * x + 1);
    if (r == rbar) throw std::logic_error("state identifies a variable with its bar");
    components.emplace(std::min(r, rbar), std::max(r, rbar));
  }
  return static_cast<int>(components.size());
}

Poly so_state_sum(const Permutation& alpha) {
  const int m = alpha.size();
  if (m == 0) return Poly(1);
  Poly total;
  State s(static_cast<std::size_t>(m));
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    int negatives = 0;
    for (int j = 0; j < m; ++j) {
      const bool neg = (mask >> j) & 1U;
      s[static_cast<std::size_t>(j)] = neg ? -1 : 1;
      negatives += neg ? 1 : 0;
    }
    const int f = boundary_count_state(alpha, s);
    total += Poly::term(Monomial(Var::n(), static_cast<std::uint32_t>(f - 1)), negatives % 2 == 0 ? 1 : -1);
  }
  return total;
}

Poly so_standard_value(int k) {
  const Poly n = Poly::variable(Var::n());
  const Poly numerator = (n - Poly(1)).pow(static_cast<unsigned>(k)) - Poly(1) + n * n;
  auto q = divide_by_linear(numerator, Var::n(), 0);
  if (!q) throw std::logic_error("standard so value is not divisible by N");
  return *q;
}

Poly so_standard_substitution(const Poly& value) {
  std::map<Var, Poly> rules;
  for (const Var& v : value.variables()) {
    if (v.kind() != VarKind::C) continue;
    if (v.index() % 2 != 0) throw std::logic_error("odd Casimir in an so value");
    rules[v] = so_standard_value(static_cast<int>(v.index()));
  }
  return value.substitute(rules);
}

bool operator_oracle_so(const Permutation& alpha, int n, int t) {
  if (alpha.size() > 5) throw std::length_error("so oracle limited to m <= 5");
  check_oracle_guard(alpha.size(), n, t);
  return word_sum(alpha, n, t, LieType::so) == evaluate_on_tensor_power(eval_wso(alpha), n, t, LieType::so);
}

}  // namespace weightsys
