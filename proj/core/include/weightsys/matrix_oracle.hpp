#pragma once

#include <cstdint>
#include <vector>

#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {

enum class LieType { gl, so };

// Dense square matrix over the rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int dim = 0);
  static RationalMatrix identity(int dim);

  int dim() const { return dim_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r * dim_ + c)]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r * dim_ + c)]; }

  RationalMatrix& operator+=(const RationalMatrix& other);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int dim_;
  std::vector<Rational> data_;
};

// Sum over i_1..i_m of X_{i_1 i_alpha(1)} ... X_{i_m i_alpha(m)} acting on (C^n)^{(x)t}, where
// X_ab = E_ab (gl) or E_ab - E_{b' a'} with a' = n+1-a (so).
RationalMatrix word_sum(const Permutation& alpha, int n, int t, LieType type);

// value evaluated with N -> n and C_k -> word_sum(standard k-cycle).
RationalMatrix evaluate_on_tensor_power(const Poly& value, int n, int t, LieType type);

// Throws std::length_error when n^t > 64, m > 8 or n^m * n^(2t) > 2^19.
void check_oracle_guard(int m, int n, int t);

}  // namespace weightsys
