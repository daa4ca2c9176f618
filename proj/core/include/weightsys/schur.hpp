#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {

// Harish-Chandra images of the Casimirs C_k as polynomials in N and the one-part Schur
// polynomials S_1..S_k, and the inverse expressions.
struct BasisTable {
  unsigned order = 0;
  std::vector<Poly> c_of_s;  // index k = 1..order; entry 0 unused
  std::vector<Poly> s_of_c;
};

BasisTable build_basis_table(unsigned order);
// Cached table of at least the given order.
const BasisTable& basis_table(unsigned order);

// Throws std::out_of_range if an index exceeds the table order.
Poly to_schur_basis(const Poly& value);
Poly to_casimir_basis(const Poly& value);

// S_i -> (-1)^i S_i
Poly schur_sign_twist(const Poly& value);

bool inverse_sign_check(const Permutation& alpha);

// Compares C_k from the product formula prod_i (1 - (x_i + (N+1)/2)u) / (1 - (x_i + (N-1)/2)u)
// with the table entry evaluated at S_j = h_j(x_1..x_N). sample.size() is N.
bool pp_oracle(unsigned k, const std::vector<Rational>& sample);
// -[u^{k+1}] of the product formula.
Rational pp_casimir(unsigned k, const std::vector<Rational>& sample);

// (1/m!) sum over S_m of w_gl. Throws BoundExceeded when m > bound.
Poly average_wgl(int m, int bound = 6);

// Coefficients of S_{m-j} (S_0 = 1) in the Schur form of A_m for even j, as polynomials in N.
// Throws std::logic_error unless the form is linear in the S_i, free of odd gaps and has
// leading coefficient 1.
std::vector<std::pair<int, Poly>> schur_average(int m, int bound = 6);

// The coefficient of S_{m-2j} divided by (-1)^j (N+m-1)_{2j}; nullopt when not divisible.
std::optional<Poly> averaging_quotient(int m, int two_j, const Poly& coefficient);

bool jucys_stirling_check(int m);
// Unsigned Stirling numbers of the first kind c(m, k), k = 0..m.
std::vector<Integer> stirling_first_kind(int m);

struct FitCandidate {
  std::string name;
  int exponent_sign = 1;     // series ((e^{v/2} - e^{-v/2}) / v)^{sign (N-1)}
  bool factorial = false;    // a_{2j} = (2j)! [v^{2j}] rather than [v^{2j}]
  bool alternating = false;  // extra (-1)^j
  std::vector<Poly> predicted;  // a_0, a_2, ...
  bool matches = false;
};

struct PrintedClaim {
  int two_j = 0;
  Poly printed;
  bool matches = false;
  // printed / extracted when that quotient is a constant
  std::optional<Rational> ratio;
};

struct FitReport {
  int max_m = 0;
  std::vector<Poly> extracted;  // a_0, a_2, ... from the largest m where available
  bool m_independent = true;
  std::vector<FitCandidate> candidates;
  std::vector<PrintedClaim> claims;
  std::string to_json() const;
};

FitReport averaging_closed_form_fit(int max_m);

}  // namespace weightsys
