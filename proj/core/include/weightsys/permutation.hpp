#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace weightsys {

// A bijection of {0..m-1}. Text forms use 1-based labels.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection of {0..m-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  // (1,2,...,m)
  static Permutation standard_cycle(int m);
  // 1-based cycles; elements not mentioned are fixed.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);
  // The chord diagram (1,n+1)(2,n+2)...(n,2n).
  static Permutation complete_chords(int n);

  int size() const { return static_cast<int>(map_.size()); }
  bool empty() const { return map_.empty(); }
  int operator[](int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return map_; }

  // 0-based cycles, each listed from its least element, ordered by least element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  int fixed_point_count() const;
  bool is_standard_cycle() const;

  Permutation inverse() const;
  // (this * other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  // sigma^{-k} alpha sigma^k
  Permutation shift_conjugate(int k) const;
  // g alpha g^{-1}
  Permutation conjugate(const Permutation& g) const;

  std::string one_line() const;
  // Every cycle including fixed points, e.g. "(1,3)(2)".
  std::string cycle_notation() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Accepts "[2,3,1]", "(1,8)(2,7,4)(3,6,5)" (every element must occur) and
// "m=5 (1,4)(2,3)" (omitted elements fixed). Throws ParseError.
Permutation parse_permutation(std::string_view text);

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int multiplicity(int part) const;
  // Multiplicative notation, "2^1 3^2"; the empty partition prints as "0".
  std::string to_string() const;
  // Accepts multiplicative notation or a comma list "3,2,2".
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;  // descending
};

std::vector<Partition> partitions_of(int m);

struct CyclicClass {
  Permutation canonical;

  int size() const { return canonical.size(); }
  friend auto operator<=>(const CyclicClass&, const CyclicClass&) = default;
  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
};

struct RotationalClass {
  // Canonical connected components, sorted.
  std::vector<CyclicClass> components;

  int size() const;
  std::string to_string() const;
  friend auto operator<=>(const RotationalClass&, const RotationalClass&) = default;
  friend bool operator==(const RotationalClass&, const RotationalClass&) = default;
};

Partition cycle_type(const Permutation& alpha);

// Number of cycles of sigma^{-1} alpha.
int face_count(const Permutation& alpha);
// (m - c - f + 1) / 2
int euler_genus(const Permutation& alpha);
// m - f + 2
int face_genus(const Permutation& alpha);

bool is_connected(const Permutation& alpha);
std::vector<Permutation> interval_decomposition(const Permutation& alpha);

CyclicClass canonical_cyclic_class(const Permutation& alpha);
RotationalClass canonical_rotational_class(const Permutation& alpha);

// legs is a membership mask of length m.
Permutation restrict_legs(const Permutation& alpha, const std::vector<bool>& legs);
// cycle_ids index into alpha.cycles().
Permutation restrict_cycles(const Permutation& alpha, const std::vector<int>& cycle_ids);

Permutation concatenate(const Permutation& a, const Permutation& b);
Permutation concatenate(const std::vector<Permutation>& parts);
// Removes leg i and relabels the rest; alpha^{-1}(i) is sent to alpha(i).
Permutation delete_leg(const Permutation& alpha, int leg);

int accents(const Permutation& alpha);

struct Monotonicity {
  bool positive = false;
  bool negative = false;
  bool monotone = false;
  // "positive", "negative", "monotone" or "mixed"; a permutation that is both
  // positive and negative reports "positive".
  std::string name() const;
};
Monotonicity monotonicity_class(const Permutation& alpha);
bool is_positive_cycle(const Permutation& alpha, const std::vector<int>& cycle);
bool is_negative_cycle(const Permutation& alpha, const std::vector<int>& cycle);

void for_each_permutation(int m, const std::function<void(const Permutation&)>& fn);
// Permutations whose cycle lengths all lie in allowed; when increasing_only, each cycle
// is listed so that all but one step is an accent (positive cycles only).
void for_each_permutation_with_cycle_lengths(int m, const std::set<int>& allowed, bool increasing_only,
                                             const std::function<void(const Permutation&)>& fn);
void for_each_permutation_of_type(const Partition& lambda, const std::function<void(const Permutation&)>& fn);

// Set partitions of {0..n-1} as block-label vectors (restricted growth strings).
void for_each_set_partition(int n, const std::function<void(const std::vector<int>& labels, int blocks)>& fn);

}  // namespace weightsys
