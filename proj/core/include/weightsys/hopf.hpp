#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weightsys/linalg.hpp"
#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"
#include "weightsys/relations.hpp"
#include "weightsys/series.hpp"

namespace weightsys {

// Hyper chord diagrams of cycle type lambda modulo two-hyper-arc relations.
class DiagramSpace {
 public:
  // Throws BoundExceeded when weight(lambda) > bound.
  explicit DiagramSpace(Partition lambda, int bound = 7);

  const Partition& cycle_type() const { return lambda_; }
  const std::vector<CyclicClass>& basis() const { return basis_; }
  int index_of(const CyclicClass& c) const;
  int relation_rank() const { return relations_.rank(); }
  int dim() const { return static_cast<int>(basis_.size()) - relations_.rank(); }
  // rank of the pi-images modulo relations
  int primitive_dim() const;

  SparseRow coordinates(const DiagramCombo& combo) const;
  bool in_relation_span(const DiagramCombo& combo) const;

 private:
  Partition lambda_;
  std::vector<CyclicClass> basis_;
  std::map<CyclicClass, int> index_;
  RowEchelon relations_;
};

int dim_H(const Partition& lambda, int bound = 7);
int dim_P(const Partition& lambda, int bound = 7);

// (1/m^2) sum_{d | m} phi(d)^2 (m/d)! d^(m/d)
Integer dim_single_cycle(int m);

using TensorCombo = std::map<std::pair<RotationalClass, RotationalClass>, Rational>;
using RotationalCombo = std::map<RotationalClass, Rational>;

// Sum over ordered splittings of the cycles into (U, W) of alpha|U (x) alpha|W.
TensorCombo coproduct_cycles(const Permutation& alpha);

// Sum over set partitions {I_1..I_k} of the cycles of (-1)^(k-1) (k-1)! alpha|I_1 # ... # alpha|I_k,
// blocks ordered by least cycle index.
DiagramCombo pi_projection(const Permutation& alpha);
// The same sum over set partitions of the legs.
DiagramCombo pi_prime_projection(const Permutation& alpha);

enum class SignFilter { any, positive, negative, monotone };

struct RotationalDims {
  int dim = 0;
  int primitive = 0;
  int connected = 0;  // classes with a single component
};

// Rotational classes of permutations of m elements whose cycle lengths lie in parts
// (all lengths when empty) and whose cycles pass the sign filter.
std::vector<RotationalClass> rotational_basis(int m, const std::set<int>& parts, SignFilter filter);
// Throws BoundExceeded when m > bound.
RotationalDims rotational_dims(int m, const std::set<int>& parts, SignFilter filter, int bound = 9);

// Ordinary generating function of set partitions with block sizes in parts (all when empty).
TruncatedSeries partition_series(const std::set<int>& parts, unsigned order);
// sum_k x^k / ((1-x)(1-2x)...(1-kx)); the unrestricted partition series.
TruncatedSeries bell_series_rational(unsigned order);
// A with P(x) = 1 + A(x P(x)).
TruncatedSeries connected_series(const std::set<int>& parts, unsigned order);

// Coefficient of N^0 in N^(c - m) w_gl(alpha) with C_k -> p_k N^(k-1).
Poly X0(const Permutation& alpha);
// Coefficient of N^0 in N^(c - m) w_so(alpha) with C_k -> p_k P_k(N). Throws
// std::domain_error for non-monotone alpha unless allow_non_monotone.
Poly Y0(const Permutation& alpha, bool allow_non_monotone = false);

enum class HopfMap { X0, Y0 };

struct HopfCheckReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Multiplicativity over concatenation and coproduct compatibility (each p_k primitive)
// over S_1..S_m (monotone permutations only for Y0).
HopfCheckReport hopf_hom_check(HopfMap map, int m);

// Sum of (i - 2) * deg_{p_i} over the heaviest monomial.
int weighted_p_degree(const Poly& value);

// Substitutes every p_k by the variable x_0.
Poly specialize_p(const Poly& value);

}  // namespace weightsys
