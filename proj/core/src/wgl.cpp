#include "weightsys/wgl.hpp"

#include <stdexcept>

#include "chain.hpp"
#include "weightsys/extended_graph.hpp"
#include "weightsys/matrix_oracle.hpp"

namespace weightsys {

namespace {

using G = ExtendedPermGraph;

Correction merge_term(const ExtendedPermGraph& graph, int k, int s, int t, int u, int v, long sign) {
  Contraction c = contract_adjacent(graph, k, s, t, u, v);
  Poly coeff(sign);
  if (c.closed_loop) coeff *= Poly::variable(Var::n());
  return Correction{std::move(coeff), c.graph.to_permutation()};
}

Permutation strip_fixed_points(const Permutation& alpha, int& stripped) {
  std::vector<bool> legs(static_cast<std::size_t>(alpha.size()));
  stripped = 0;
  for (int i = 0; i < alpha.size(); ++i) {
    legs[static_cast<std::size_t>(i)] = alpha[i] != i;
    if (alpha[i] == i) ++stripped;
  }
  return stripped == 0 ? alpha : restrict_legs(alpha, legs);
}

}  // namespace

SwapStep gl_swap_step(const Permutation& alpha, int k) {
  if (k < 0 || k + 1 >= alpha.size()) throw std::out_of_range("swap position out of range");
  if (detail::is_adjacent_transposition_pair(alpha, k)) throw std::invalid_argument("swap inside a 2-cycle (k, k+1) is vacuous");
  const ExtendedPermGraph graph = ExtendedPermGraph::from_permutation(alpha);
  SwapStep step;
  step.swapped = detail::swap_adjacent(alpha, k);
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb with E_ab, E_cd the generators at k, k+1.
  step.corrections.push_back(merge_term(graph, k, G::head(k), G::tail(k + 1), G::tail(k), G::head(k + 1), 1));
  step.corrections.push_back(merge_term(graph, k, G::head(k + 1), G::tail(k), G::head(k), G::tail(k + 1), -1));
  return step;
}

Poly GlEngine::eval(const Permutation& alpha) {
  if (alpha.empty()) return Poly(1);
  int stripped = 0;
  const Permutation core = strip_fixed_points(alpha, stripped);
  Poly value = Poly::variable(Var::c(1), static_cast<std::uint32_t>(stripped));
  if (core.empty()) return value;
  for (const auto& block : interval_decomposition(core)) value *= eval_core(canonical_cyclic_class(block).canonical);
  return value;
}

Poly GlEngine::eval_core(const Permutation& canonical) {
  return memo_.get_or_compute(canonical, [&] {
    if (canonical.is_standard_cycle()) return Poly::variable(Var::c(static_cast<std::uint32_t>(canonical.size())));
    Poly value;
    walk_chain(canonical, value);
    return value;
  });
}

BlockTrace GlEngine::walk_chain(const Permutation& canonical, Poly& value) {
  std::mt19937_64 rng(options_.seed ^ (0x9e3779b97f4a7c15ULL * (chain_counter_.fetch_add(1) + 1)));
  std::mt19937_64* r = options_.randomized ? &rng : nullptr;
  Poly delta;
  BlockTrace trace = detail::walk_chain(
      canonical, detail::standard_conjugator(canonical, r), gl_swap_step,
      [this](const Permutation& p) { return eval(p); }, delta, r);
  value = std::move(delta);
  Poly product(1);
  for (const auto& cycle : trace.target.cycles()) product *= Poly::variable(Var::c(static_cast<std::uint32_t>(cycle.size())));
  value += product;
  return trace;
}

EvaluationTrace GlEngine::trace(const Permutation& alpha) {
  EvaluationTrace t;
  t.input = alpha;
  t.value = eval(alpha);
  if (alpha.empty()) return t;
  const Permutation core = strip_fixed_points(alpha, t.stripped_fixed_points);
  if (core.empty()) return t;
  for (const auto& block : interval_decomposition(core)) {
    const Permutation canonical = canonical_cyclic_class(block).canonical;
    if (canonical.is_standard_cycle()) {
      t.blocks.push_back(BlockTrace{canonical, canonical, {}});
      continue;
    }
    Poly scratch;
    t.blocks.push_back(walk_chain(canonical, scratch));
  }
  return t;
}

GlEngine& default_gl_engine() {
  static GlEngine engine;
  return engine;
}

Poly eval_wgl(const Permutation& alpha) { return default_gl_engine().eval(alpha); }

Poly standard_substitution(const Poly& value) {
  std::map<Var, Poly> rules;
  for (const Var& v : value.variables()) {
    if (v.kind() == VarKind::C) rules[v] = Poly::variable(Var::n(), v.index() - 1);
  }
  return value.substitute(rules);
}

bool operator_oracle_gl(const Permutation& alpha, int n, int t) {
  check_oracle_guard(alpha.size(), n, t);
  return word_sum(alpha, n, t, LieType::gl) == evaluate_on_tensor_power(eval_wgl(alpha), n, t, LieType::gl);
}

}  // namespace weightsys
