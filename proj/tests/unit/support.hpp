#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys::testing {

inline Permutation random_permutation(int m, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline Permutation random_fixed_point_free(int m, std::mt19937_64& rng) {
  for (;;) {
    Permutation p = random_permutation(m, rng);
    if (p.fixed_point_count() == 0) return p;
  }
}

// Small random polynomial in N, C_1..C_3 with integer coefficients in [-3, 3].
inline Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  Poly p;
  for (int t = 0; t < 4; ++t) {
    Poly term(static_cast<long>(coeff(rng)));
    term *= Poly::variable(Var::n(), static_cast<std::uint32_t>(expo(rng)));
    for (std::uint32_t k = 1; k <= 3; ++k) term *= Poly::variable(Var::c(k), static_cast<std::uint32_t>(expo(rng)));
    p += term;
  }
  return p;
}

}  // namespace weightsys::testing
