#include "weightsys/hopf.hpp"

#include <algorithm>
#include <stdexcept>

#include "weightsys/errors.hpp"
#include "weightsys/wgl.hpp"
#include "weightsys/wso.hpp"

namespace weightsys {

namespace {

// Concatenation of alpha restricted to each block, blocks in label order.
Permutation block_product(const Permutation& alpha, const std::vector<std::vector<bool>>& masks) {
  std::vector<Permutation> parts;
  parts.reserve(masks.size());
  for (const auto& mask : masks) parts.push_back(restrict_legs(alpha, mask));
  return concatenate(parts);
}

Rational partition_sign_factor(int blocks) {
  Integer f = 1;
  for (int i = 2; i < blocks; ++i) f *= i;
  return Rational(blocks % 2 == 1 ? f : Integer(-f));
}

}  // namespace

DiagramSpace::DiagramSpace(Partition lambda, int bound) : lambda_(std::move(lambda)) {
  if (lambda_.weight() > bound) throw BoundExceeded("diagram space bound exceeded: m = " + std::to_string(lambda_.weight()));
  std::set<CyclicClass> classes;
  std::vector<Permutation> perms;
  for_each_permutation_of_type(lambda_, [&](const Permutation& p) {
    classes.insert(canonical_cyclic_class(p));
    perms.push_back(p);
  });
  basis_.assign(classes.begin(), classes.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  // Cyclic shifts are consequences of the relations, so cyclic classes serve as coordinates.
  for (const auto& alpha : perms) {
    const auto cycles = alpha.cycles();
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      for (int leg : cycles[ci]) {
        for (std::size_t ti = 0; ti < cycles.size(); ++ti) {
          if (ti == ci) continue;
          SparseRow row = coordinates(two_hyper_arc_element(alpha, leg, static_cast<int>(ti)));
          if (!row.empty()) relations_.add(std::move(row));
        }
      }
    }
  }
}

int DiagramSpace::index_of(const CyclicClass& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw std::out_of_range("class outside the diagram space basis");
  return it->second;
}

SparseRow DiagramSpace::coordinates(const DiagramCombo& combo) const {
  std::vector<std::pair<int, Rational>> entries;
  for (const auto& [cls, c] : combo.cyclic_view()) entries.emplace_back(index_of(cls), c);
  return integer_row(entries);
}

bool DiagramSpace::in_relation_span(const DiagramCombo& combo) const { return relations_.in_span(coordinates(combo)); }

int DiagramSpace::primitive_dim() const {
  RowEchelon echelon = relations_;
  const int base = echelon.rank();
  for (const auto& cls : basis_) {
    SparseRow row = coordinates(pi_projection(cls.canonical));
    if (!row.empty()) echelon.add(std::move(row));
  }
  return echelon.rank() - base;
}

int dim_H(const Partition& lambda, int bound) { return DiagramSpace(lambda, bound).dim(); }

int dim_P(const Partition& lambda, int bound) { return DiagramSpace(lambda, bound).primitive_dim(); }

Integer dim_single_cycle(int m) {
  if (m < 1) throw std::invalid_argument("dim_single_cycle needs m >= 1");
  auto phi = [](int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      while (n % p == 0) n /= p;
      result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
  };
  Integer total = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int q = m / d;
    Integer term = phi(d);
    term *= phi(d);
    for (int i = 2; i <= q; ++i) term *= i;
    for (int i = 0; i < q; ++i) term *= d;
    total += term;
  }
  Integer denom = m;
  denom *= m;
  if (total % denom != 0) throw std::logic_error("single-cycle dimension is not an integer");
  return total / denom;
}

TensorCombo coproduct_cycles(const Permutation& alpha) {
  TensorCombo out;
  const int c = alpha.cycle_count();
  for (std::uint32_t mask = 0; mask < (1U << c); ++mask) {
    std::vector<int> u;
    std::vector<int> w;
    for (int i = 0; i < c; ++i) ((mask >> i) & 1U ? u : w).push_back(i);
    out[{canonical_rotational_class(restrict_cycles(alpha, u)), canonical_rotational_class(restrict_cycles(alpha, w))}] += 1;
  }
  return out;
}

DiagramCombo pi_projection(const Permutation& alpha) {
  DiagramCombo out;
  const auto cycles = alpha.cycles();
  const int c = static_cast<int>(cycles.size());
  for_each_set_partition(c, [&](const std::vector<int>& labels, int blocks) {
    std::vector<std::vector<bool>> masks(static_cast<std::size_t>(blocks), std::vector<bool>(static_cast<std::size_t>(alpha.size())));
    for (int i = 0; i < c; ++i) {
      for (int leg : cycles[static_cast<std::size_t>(i)]) masks[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])][static_cast<std::size_t>(leg)] = true;
    }
    out.add(block_product(alpha, masks), partition_sign_factor(blocks));
  });
  return out;
}

DiagramCombo pi_prime_projection(const Permutation& alpha) {
  DiagramCombo out;
  const int m = alpha.size();
  for_each_set_partition(m, [&](const std::vector<int>& labels, int blocks) {
    std::vector<std::vector<bool>> masks(static_cast<std::size_t>(blocks), std::vector<bool>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) masks[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i)] = true;
    out.add(block_product(alpha, masks), partition_sign_factor(blocks));
  });
  return out;
}

namespace {

bool passes(const Permutation& p, SignFilter filter) {
  if (filter == SignFilter::any) return true;
  const Monotonicity mono = monotonicity_class(p);
  switch (filter) {
    case SignFilter::positive: return mono.positive;
    case SignFilter::negative: return mono.negative;
    case SignFilter::monotone: return mono.monotone;
    case SignFilter::any: break;
  }
  return true;
}

std::set<int> all_lengths(int m) {
  std::set<int> s;
  for (int i = 1; i <= m; ++i) s.insert(i);
  return s;
}

}  // namespace

std::vector<RotationalClass> rotational_basis(int m, const std::set<int>& parts, SignFilter filter) {
  std::set<RotationalClass> classes;
  const std::set<int> lengths = parts.empty() ? all_lengths(m) : parts;
  for_each_permutation_with_cycle_lengths(m, lengths, filter == SignFilter::positive, [&](const Permutation& p) {
    if (passes(p, filter)) classes.insert(canonical_rotational_class(p));
  });
  return {classes.begin(), classes.end()};
}

RotationalDims rotational_dims(int m, const std::set<int>& parts, SignFilter filter, int bound) {
  if (m > bound) throw BoundExceeded("rotational enumeration bound exceeded: m = " + std::to_string(m));
  const auto basis = rotational_basis(m, parts, filter);
  std::map<RotationalClass, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  RotationalDims dims;
  dims.dim = static_cast<int>(basis.size());
  RowEchelon echelon;
  for (const auto& cls : basis) {
    if (cls.components.size() == 1) ++dims.connected;
    std::vector<Permutation> parts_of_rep;
    for (const auto& comp : cls.components) parts_of_rep.push_back(comp.canonical);
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& [term, c] : pi_projection(concatenate(parts_of_rep)).rotational_view()) {
      auto it = index.find(term);
      if (it == index.end()) throw std::logic_error("projection left the filtered basis");
      entries.emplace_back(it->second, c);
    }
    SparseRow row = integer_row(entries);
    if (!row.empty()) echelon.add(std::move(row));
  }
  dims.primitive = echelon.rank();
  return dims;
}

TruncatedSeries partition_series(const std::set<int>& parts, unsigned order) {
  std::vector<Integer> b(order + 1);
  b[0] = 1;
  // B(n) = sum_{s in parts} C(n-1, s-1) B(n-s): choose the block of the first element.
  std::vector<std::vector<Integer>> binom(order + 1, std::vector<Integer>(order + 1));
  for (unsigned n = 0; n <= order; ++n) {
    binom[n][0] = 1;
    for (unsigned k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Integer(0));
  }
  for (unsigned n = 1; n <= order; ++n) {
    for (unsigned s = 1; s <= n; ++s) {
      if (!parts.empty() && !parts.count(static_cast<int>(s))) continue;
      b[n] += binom[n - 1][s - 1] * b[n - s];
    }
  }
  TruncatedSeries out(order);
  for (unsigned n = 0; n <= order; ++n) out[n] = Poly(Rational(b[n]));
  return out;
}

TruncatedSeries bell_series_rational(unsigned order) {
  TruncatedSeries total = TruncatedSeries::constant(order, Poly(1));
  TruncatedSeries term = TruncatedSeries::constant(order, Poly(1));
  const TruncatedSeries x = TruncatedSeries::linear(order, Poly(), Poly(1));
  for (unsigned k = 1; k <= order; ++k) {
    term = term * x * TruncatedSeries::linear(order, Poly(1), Poly(-static_cast<long>(k))).reciprocal();
    total += term;
  }
  return total;
}

TruncatedSeries connected_series(const std::set<int>& parts, unsigned order) {
  const TruncatedSeries p = partition_series(parts, order);
  const TruncatedSeries xp = TruncatedSeries::linear(order, Poly(), Poly(1)) * p;
  TruncatedSeries a(order);
  for (unsigned n = 1; n <= order; ++n) {
    // a_n enters [x^n] A(xP) only through a_n (xP)^n, whose leading coefficient is 1.
    const TruncatedSeries composed = a.compose(xp);
    a[n] = p[n] - composed[n];
  }
  return a;
}

namespace {

Poly n_zero_coefficient(const Poly& substituted, const Permutation& alpha) {
  return laurent_coefficient(substituted, Var::n(), alpha.cycle_count() - alpha.size(), 0);
}

}  // namespace

Poly X0(const Permutation& alpha) {
  const Poly w = eval_wgl(alpha);
  std::map<Var, Poly> rules;
  for (const Var& v : w.variables()) {
    if (v.kind() == VarKind::C) {
      rules[v] = Poly::variable(Var::p(v.index())) * Poly::variable(Var::n(), v.index() - 1);
    }
  }
  return n_zero_coefficient(w.substitute(rules), alpha);
}

Poly Y0(const Permutation& alpha, bool allow_non_monotone) {
  if (!allow_non_monotone && !monotonicity_class(alpha).monotone) {
    throw std::domain_error("Y0 is defined on monotone permutations: " + alpha.cycle_notation());
  }
  const Poly w = eval_wso(alpha);
  std::map<Var, Poly> rules;
  for (const Var& v : w.variables()) {
    if (v.kind() == VarKind::C) {
      rules[v] = Poly::variable(Var::p(v.index())) * so_standard_value(static_cast<int>(v.index()));
    }
  }
  return n_zero_coefficient(w.substitute(rules), alpha);
}

int weighted_p_degree(const Poly& value) {
  int best = 0;
  bool first = true;
  for (const auto& [mono, c] : value.terms()) {
    int d = 0;
    for (const auto& [v, e] : mono.factors()) {
      if (v.kind() == VarKind::p) d += (static_cast<int>(v.index()) - 2) * static_cast<int>(e);
    }
    best = first ? d : std::max(best, d);
    first = false;
  }
  return best;
}

Poly specialize_p(const Poly& value) {
  std::map<Var, Poly> rules;
  for (const Var& v : value.variables()) {
    if (v.kind() == VarKind::p) rules[v] = Poly::variable(Var::x(0));
  }
  return value.substitute(rules);
}

HopfCheckReport hopf_hom_check(HopfMap map, int m) {
  HopfCheckReport report;
  std::map<Permutation, Poly> cache;
  auto value = [&](const Permutation& p) -> const Poly& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, p.empty() ? Poly(1) : (map == HopfMap::X0 ? X0(p) : Y0(p))).first;
    return it->second;
  };
  auto admissible = [&](const Permutation& p) { return map == HopfMap::X0 || monotonicity_class(p).monotone; };
  auto second_copy = [](const Poly& v) {
    std::map<Var, Poly> rules;
    for (const Var& x : v.variables()) {
      if (x.kind() == VarKind::p) rules[x] = Poly::variable(Var::aux(x.index()));
    }
    return v.substitute(rules);
  };
  auto primitive_coproduct = [](const Poly& v) {
    std::map<Var, Poly> rules;
    for (const Var& x : v.variables()) {
      if (x.kind() == VarKind::p) rules[x] = Poly::variable(x) + Poly::variable(Var::aux(x.index()));
    }
    return v.substitute(rules);
  };

  std::vector<std::vector<Permutation>> by_size(static_cast<std::size_t>(m) + 1);
  for (int k = 1; k <= m; ++k) {
    for_each_permutation(k, [&](const Permutation& p) {
      if (admissible(p)) by_size[static_cast<std::size_t>(k)].push_back(p);
    });
  }

  for (int k = 1; k <= m; ++k) {
    for (const auto& alpha : by_size[static_cast<std::size_t>(k)]) {
      ++report.checked;
      Poly rhs;
      const int c = alpha.cycle_count();
      for (std::uint32_t mask = 0; mask < (1U << c); ++mask) {
        std::vector<int> u;
        std::vector<int> w;
        for (int i = 0; i < c; ++i) ((mask >> i) & 1U ? u : w).push_back(i);
        rhs += value(restrict_cycles(alpha, u)) * second_copy(value(restrict_cycles(alpha, w)));
      }
      if (primitive_coproduct(value(alpha)) != rhs) report.violations.push_back("coproduct: " + alpha.cycle_notation());
    }
    for (int a = 1; a < k; ++a) {
      for (const auto& alpha : by_size[static_cast<std::size_t>(a)]) {
        for (const auto& beta : by_size[static_cast<std::size_t>(k - a)]) {
          ++report.checked;
          const Permutation product = concatenate(alpha, beta);
          if (value(product) != value(alpha) * value(beta)) {
            report.violations.push_back("product: " + alpha.cycle_notation() + " # " + beta.cycle_notation());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace weightsys
