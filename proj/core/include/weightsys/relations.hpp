#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {

// Formal rational combination of permutations.
class DiagramCombo {
 public:
  void add(const Permutation& p, const Rational& coeff);
  void add(const DiagramCombo& other, const Rational& scale = 1);

  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::map<CyclicClass, Rational> cyclic_view() const;
  std::map<RotationalClass, Rational> rotational_view() const;

  // Scaled so the first term has coefficient +1; equal up to scale iff canonical forms agree.
  DiagramCombo normalized() const;

  Poly apply(const std::function<Poly(const Permutation&)>& f) const;

  // [{"coeff": "1", "perm": "(1,2)(3)"}, ...]
  std::string to_json() const;

  friend bool operator==(const DiagramCombo&, const DiagramCombo&) = default;
  friend auto operator<=>(const DiagramCombo& a, const DiagramCombo& b) {
    return a.terms_ < b.terms_ ? std::strong_ordering::less
           : b.terms_ < a.terms_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  std::map<Permutation, Rational> terms_;
};

// Inserts a new leg at position gap (0-based, 0..m) of base. The new leg follows pred and
// precedes succ in its cycle (base labels); pred = succ = -1 makes it a fixed point.
Permutation insert_leg(const Permutation& base, int gap, int pred, int succ);

// Sliding free_leg around its own cycle: +1 for insertion right before, -1 right after,
// each other leg of the cycle. 0-based leg.
DiagramCombo one_hyper_arc_element(const Permutation& alpha, int free_leg);

// Sliding free_leg around the cycle target_cycle (index into alpha.cycles()) of another
// cycle. Throws std::invalid_argument if free_leg lies in target_cycle.
DiagramCombo two_hyper_arc_element(const Permutation& alpha, int free_leg, int target_cycle);

enum class RelationKind { one_hyper_arc, two_hyper_arc };

struct RelationElement {
  RelationKind kind;
  Permutation source;
  int free_leg;
  int target_cycle;  // -1 for one-hyper-arc elements
  DiagramCombo combo;
};

struct RelationOptions {
  std::optional<Partition> cycle_type;
  bool one_hyper_arc = true;
  bool two_hyper_arc = true;
  int bound = 8;
};

// All nonzero elements over S_m, deduplicated by normalized combination. Throws
// BoundExceeded when m > options.bound.
std::vector<RelationElement> enumerate_relations(int m, const RelationOptions& options = {});

struct RelationReport {
  int m = 0;
  std::size_t elements = 0;
  std::vector<std::pair<RelationElement, Poly>> violations;
  bool ok() const { return violations.empty(); }
};

RelationReport check_functional(const std::function<Poly(const Permutation&)>& f, int m,
                                const RelationOptions& options = {}, unsigned threads = 1);

// alpha -> t^{face_count(alpha)} with t = a_0.
Poly face_count_monomial(const Permutation& alpha);

}  // namespace weightsys
