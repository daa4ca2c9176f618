#pragma once

#include <vector>

#include "weightsys/poly.hpp"

namespace weightsys {

// Power series in a formal parameter u with Poly coefficients, truncated after u^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order);
  TruncatedSeries(unsigned order, std::vector<Poly> coeffs);

  // c0 + c1 u
  static TruncatedSeries linear(unsigned order, const Poly& c0, const Poly& c1);
  static TruncatedSeries constant(unsigned order, const Poly& c0);

  unsigned order() const { return order_; }
  const Poly& operator[](unsigned i) const { return coeffs_.at(i); }
  Poly& operator[](unsigned i) { return coeffs_.at(i); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Poly& s, TruncatedSeries a);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // Requires constant term 1.
  TruncatedSeries reciprocal() const;
  TruncatedSeries log() const;
  // Requires constant term 0.
  TruncatedSeries exp() const;
  // exp(e * log(this)); requires constant term 1.
  TruncatedSeries power(const Poly& exponent) const;
  // this(inner(u)); requires inner constant term 0.
  TruncatedSeries compose(const TruncatedSeries& inner) const;
  // d/du
  TruncatedSeries derivative() const;

 private:
  void require_same_order(const TruncatedSeries& other) const;

  unsigned order_;
  std::vector<Poly> coeffs_;
};

}  // namespace weightsys
