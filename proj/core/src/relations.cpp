#include "weightsys/relations.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "weightsys/errors.hpp"
#include "weightsys/parallel.hpp"

namespace weightsys {

void DiagramCombo::add(const Permutation& p, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void DiagramCombo::add(const DiagramCombo& other, const Rational& scale) {
  for (const auto& [p, c] : other.terms_) add(p, c * scale);
}

std::map<CyclicClass, Rational> DiagramCombo::cyclic_view() const {
  std::map<CyclicClass, Rational> out;
  for (const auto& [p, c] : terms_) {
    auto& slot = out[canonical_cyclic_class(p)];
    slot += c;
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

std::map<RotationalClass, Rational> DiagramCombo::rotational_view() const {
  std::map<RotationalClass, Rational> out;
  for (const auto& [p, c] : terms_) out[canonical_rotational_class(p)] += c;
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

DiagramCombo DiagramCombo::normalized() const {
  DiagramCombo r;
  if (terms_.empty()) return r;
  const Rational scale = 1 / terms_.begin()->second;
  r.add(*this, scale);
  return r;
}

Poly DiagramCombo::apply(const std::function<Poly(const Permutation&)>& f) const {
  Poly total;
  for (const auto& [p, c] : terms_) total += f(p) * c;
  return total;
}

std::string DiagramCombo::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [p, c] : terms_) arr.push_back({{"coeff", c.get_str()}, {"perm", p.cycle_notation()}});
  return arr.dump();
}

Permutation insert_leg(const Permutation& base, int gap, int pred, int succ) {
  const int n = base.size();
  if (gap < 0 || gap > n) throw std::out_of_range("insert_leg: gap out of range");
  if ((pred < 0) != (succ < 0)) throw std::invalid_argument("insert_leg: pred and succ must both be set or both unset");
  if (pred >= 0 && base[pred] != succ) throw std::invalid_argument("insert_leg: succ must follow pred in base");
  auto shift = [gap](int x) { return x < gap ? x : x + 1; };
  std::vector<int> map(static_cast<std::size_t>(n + 1));
  for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(shift(x))] = shift(base[x]);
  if (pred < 0) {
    map[static_cast<std::size_t>(gap)] = gap;
  } else {
    map[static_cast<std::size_t>(shift(pred))] = gap;
    map[static_cast<std::size_t>(gap)] = shift(succ);
  }
  return Permutation(std::move(map));
}

namespace {

struct Removed {
  Permutation base;
  int pred = -1;
  int succ = -1;
};

int relabel_after_delete(int x, int deleted) { return x > deleted ? x - 1 : x; }

Removed remove_free_leg(const Permutation& alpha, int free_leg) {
  Removed r;
  r.base = delete_leg(alpha, free_leg);
  if (alpha[free_leg] != free_leg) {
    r.pred = relabel_after_delete(alpha.inverse()[free_leg], free_leg);
    r.succ = relabel_after_delete(alpha[free_leg], free_leg);
  }
  return r;
}

void slide_around(DiagramCombo& combo, const Removed& removed, const std::vector<int>& legs, int free_leg) {
  for (int leg : legs) {
    const int j = relabel_after_delete(leg, free_leg);
    combo.add(insert_leg(removed.base, j, removed.pred, removed.succ), 1);
    combo.add(insert_leg(removed.base, j + 1, removed.pred, removed.succ), -1);
  }
}

int cycle_of(const std::vector<std::vector<int>>& cycles, int leg) {
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (std::find(cycles[i].begin(), cycles[i].end(), leg) != cycles[i].end()) return static_cast<int>(i);
  }
  throw std::out_of_range("leg out of range");
}

}  // namespace

DiagramCombo one_hyper_arc_element(const Permutation& alpha, int free_leg) {
  if (free_leg < 0 || free_leg >= alpha.size()) throw std::out_of_range("free leg out of range");
  const auto cycles = alpha.cycles();
  std::vector<int> others;
  for (int leg : cycles[static_cast<std::size_t>(cycle_of(cycles, free_leg))]) {
    if (leg != free_leg) others.push_back(leg);
  }
  DiagramCombo combo;
  slide_around(combo, remove_free_leg(alpha, free_leg), others, free_leg);
  return combo;
}

DiagramCombo two_hyper_arc_element(const Permutation& alpha, int free_leg, int target_cycle) {
  if (free_leg < 0 || free_leg >= alpha.size()) throw std::out_of_range("free leg out of range");
  const auto cycles = alpha.cycles();
  if (target_cycle < 0 || target_cycle >= static_cast<int>(cycles.size())) throw std::out_of_range("target cycle out of range");
  if (cycle_of(cycles, free_leg) == target_cycle) throw std::invalid_argument("free leg lies in the target cycle");
  DiagramCombo combo;
  slide_around(combo, remove_free_leg(alpha, free_leg), cycles[static_cast<std::size_t>(target_cycle)], free_leg);
  return combo;
}

std::vector<RelationElement> enumerate_relations(int m, const RelationOptions& options) {
  if (m > options.bound) throw BoundExceeded("relation enumeration bound exceeded: m = " + std::to_string(m));
  std::vector<RelationElement> out;
  std::set<DiagramCombo> seen;
  auto emit = [&](RelationElement e) {
    if (e.combo.empty()) return;
    if (!seen.insert(e.combo.normalized()).second) return;
    out.push_back(std::move(e));
  };
  auto visit = [&](const Permutation& alpha) {
    const auto cycles = alpha.cycles();
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      for (int leg : cycles[ci]) {
        if (options.one_hyper_arc && cycles[ci].size() > 1) {
          emit({RelationKind::one_hyper_arc, alpha, leg, -1, one_hyper_arc_element(alpha, leg)});
        }
        if (!options.two_hyper_arc) continue;
        for (std::size_t ti = 0; ti < cycles.size(); ++ti) {
          if (ti == ci) continue;
          emit({RelationKind::two_hyper_arc, alpha, leg, static_cast<int>(ti),
                two_hyper_arc_element(alpha, leg, static_cast<int>(ti))});
        }
      }
    }
  };
  if (options.cycle_type) {
    if (options.cycle_type->weight() != m) throw std::invalid_argument("cycle type weight differs from m");
    for_each_permutation_of_type(*options.cycle_type, visit);
  } else {
    for_each_permutation(m, visit);
  }
  return out;
}

RelationReport check_functional(const std::function<Poly(const Permutation&)>& f, int m,
                                const RelationOptions& options, unsigned threads) {
  RelationReport report;
  report.m = m;
  const auto elements = enumerate_relations(m, options);
  report.elements = elements.size();
  std::vector<Poly> values(elements.size());
  parallel_for(elements.size(), threads, [&](std::size_t i) { values[i] = elements[i].combo.apply(f); });
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!values[i].is_zero()) report.violations.emplace_back(elements[i], values[i]);
  }
  return report;
}

Poly face_count_monomial(const Permutation& alpha) {
  return Poly::variable(Var::aux(0), static_cast<std::uint32_t>(face_count(alpha)));
}

}  // namespace weightsys
