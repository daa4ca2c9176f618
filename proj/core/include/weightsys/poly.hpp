#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weightsys/errors.hpp"

namespace weightsys {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

enum class VarKind : std::uint8_t { N = 0, C = 1, S = 2, p = 3, x = 4, aux = 5 };

class Var {
 public:
  constexpr Var() = default;
  constexpr Var(VarKind kind, std::uint32_t index) : kind_(kind), index_(kind == VarKind::N ? 0 : index) {}

  static constexpr Var n() { return Var(VarKind::N, 0); }
  static constexpr Var c(std::uint32_t k) { return Var(VarKind::C, k); }
  static constexpr Var s(std::uint32_t k) { return Var(VarKind::S, k); }
  static constexpr Var p(std::uint32_t k) { return Var(VarKind::p, k); }
  static constexpr Var x(std::uint32_t i) { return Var(VarKind::x, i); }
  static constexpr Var aux(std::uint32_t i) { return Var(VarKind::aux, i); }

  constexpr VarKind kind() const { return kind_; }
  constexpr std::uint32_t index() const { return index_; }

  // "N", "C_3", "S_2", "p_4", "x_1", "a_0".
  std::string name() const;
  static Var parse(std::string_view name);

  friend constexpr auto operator<=>(const Var&, const Var&) = default;

 private:
  VarKind kind_ = VarKind::N;
  std::uint32_t index_ = 0;
};

// Product of variable powers, kept sorted by variable with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exponent = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(Var v) const;
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic: higher total degree first, then factor lists compared lexicographically.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexOrder>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)
  static Poly variable(Var v, std::uint32_t exponent = 1);
  static Poly term(const Monomial& m, const Rational& coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Adds coeff*m in place.
  void add_term(const Monomial& m, const Rational& coeff);

  Poly pow(unsigned exponent) const;

  // Simultaneous substitution; variables without a rule are kept.
  Poly substitute(const std::map<Var, Poly>& rules) const;

  // Coefficient of v^e, as a polynomial free of v.
  Poly coefficient_of(Var v, std::uint32_t e) const;
  std::uint32_t degree_in(Var v) const;
  std::uint32_t total_degree() const;
  std::set<Var> variables() const;

  // Exact evaluation; every occurring variable must have a value.
  Rational evaluate(const std::map<Var, Rational>& values) const;

  std::string to_string() const;
  static Poly parse(std::string_view text);
  std::string to_json() const;
  static Poly from_json(std::string_view text);

 private:
  TermMap terms_;
};

// Coefficient of v^target in v^shift * p.
Poly laurent_coefficient(const Poly& p, Var v, int shift, int target);

// Quotient of p by (v - root) when the division is exact, otherwise nullopt.
std::optional<Poly> divide_by_linear(const Poly& p, Var v, const Rational& root);

// Falling factorial (v + a)(v + a - 1)...(v + a - j + 1).
Poly falling_factorial(Var v, long a, unsigned j);

}  // namespace weightsys
