#include "weightsys/series.hpp"

#include <stdexcept>
#include <utility>

namespace weightsys {

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Poly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::linear(unsigned order, const Poly& c0, const Poly& c1) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c0;
  if (order >= 1) s.coeffs_[1] = c1;
  return s;
}

TruncatedSeries TruncatedSeries::constant(unsigned order, const Poly& c0) { return linear(order, c0, Poly()); }

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (order_ != other.order_) throw std::invalid_argument("series order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(other);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(other);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_order(b);
  TruncatedSeries r(a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const Poly& s, TruncatedSeries a) {
  for (auto& c : a.coeffs_) c = s * c;
  return a;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] != Poly(1)) throw std::domain_error("reciprocal needs constant term 1");
  TruncatedSeries r(order_);
  r.coeffs_[0] = Poly(1);
  for (unsigned n = 1; n <= order_; ++n) {
    Poly acc;
    for (unsigned i = 1; i <= n; ++i) {
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * r.coeffs_[n - i];
    }
    r.coeffs_[n] = -acc;
  }
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries d(order_);
  for (unsigned i = 1; i <= order_; ++i) d.coeffs_[i - 1] = coeffs_[i] * Rational(i);
  return d;
}

TruncatedSeries TruncatedSeries::log() const {
  if (coeffs_[0] != Poly(1)) throw std::domain_error("log needs constant term 1");
  // log f = integral of f'/f
  TruncatedSeries q = derivative() * reciprocal();
  TruncatedSeries r(order_);
  for (unsigned i = 1; i <= order_; ++i) r.coeffs_[i] = q.coeffs_[i - 1] * Rational(1, i);
  return r;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("exp needs constant term 0");
  // g = exp f satisfies n g_n = sum_{k=1}^{n} k f_k g_{n-k}
  TruncatedSeries g(order_);
  g.coeffs_[0] = Poly(1);
  for (unsigned n = 1; n <= order_; ++n) {
    Poly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (!coeffs_[k].is_zero()) acc += coeffs_[k] * g.coeffs_[n - k] * Rational(k);
    }
    g.coeffs_[n] = acc * Rational(1, n);
  }
  return g;
}

TruncatedSeries TruncatedSeries::power(const Poly& exponent) const { return (exponent * log()).exp(); }

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  require_same_order(inner);
  if (!inner.coeffs_[0].is_zero()) throw std::domain_error("compose needs inner constant term 0");
  // Horner evaluation in the series ring.
  TruncatedSeries r(order_);
  for (unsigned i = order_ + 1; i-- > 0;) {
    r = r * inner;
    r.coeffs_[0] += coeffs_[i];
  }
  return r;
}

}  // namespace weightsys
