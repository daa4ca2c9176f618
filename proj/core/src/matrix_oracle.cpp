#include "weightsys/matrix_oracle.hpp"

#include <map>
#include <stdexcept>

namespace weightsys {

RationalMatrix::RationalMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim)) {}

RationalMatrix RationalMatrix::identity(int dim) {
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  const int d = a.dim_;
  RationalMatrix r(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b.at(k, j) != 0) r.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return r;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

void check_oracle_guard(int m, int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("oracle needs n >= 1 and t >= 1");
  double dim = 1;
  for (int i = 0; i < t; ++i) dim *= n;
  double work = dim * dim;
  for (int i = 0; i < m; ++i) work *= n;
  if (dim > 64 || m > 8 || work > 524288.0) {
    throw std::length_error("oracle size guard exceeded (n^t <= 64, m <= 8, n^m * n^(2t) <= 2^19)");
  }
}

namespace {

struct TensorSpace {
  int n;
  int t;
  int dim;
  std::vector<std::vector<int>> digits;  // digits[J][p]
  std::vector<int> power;                // n^p
};

TensorSpace make_space(int n, int t) {
  TensorSpace s{n, t, 1, {}, {}};
  for (int p = 0; p < t; ++p) {
    s.power.push_back(s.dim);
    s.dim *= n;
  }
  s.digits.assign(static_cast<std::size_t>(s.dim), std::vector<int>(static_cast<std::size_t>(t)));
  for (int j = 0; j < s.dim; ++j) {
    int x = j;
    for (int p = 0; p < t; ++p) {
      s.digits[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = x % n;
      x /= n;
    }
  }
  return s;
}

using Dense = std::vector<std::int64_t>;

// M <- M * rho(E_ab), acting column-wise: rho(E_ab) sends basis J with J_p = b to J with J_p = a.
void right_multiply_unit(const TensorSpace& s, const Dense& in, Dense& out, int a, int b, std::int64_t coeff) {
  for (int col = 0; col < s.dim; ++col) {
    for (int p = 0; p < s.t; ++p) {
      if (s.digits[static_cast<std::size_t>(col)][static_cast<std::size_t>(p)] != b) continue;
      const int target = col + (a - b) * s.power[static_cast<std::size_t>(p)];
      // column `col` of rho(E_ab) has a single 1 in row `target`, so (M rho)[:, col] += M[:, target]
      for (int row = 0; row < s.dim; ++row) {
        out[static_cast<std::size_t>(row * s.dim + col)] += coeff * in[static_cast<std::size_t>(row * s.dim + target)];
      }
    }
  }
}

void right_multiply_generator(const TensorSpace& s, const Dense& in, Dense& out, int a, int b, LieType type) {
  right_multiply_unit(s, in, out, a, b, 1);
  if (type == LieType::so) right_multiply_unit(s, in, out, s.n - 1 - b, s.n - 1 - a, -1);
}

}  // namespace

RationalMatrix word_sum(const Permutation& alpha, int n, int t, LieType type) {
  check_oracle_guard(alpha.size(), n, t);
  const TensorSpace s = make_space(n, t);
  const int m = alpha.size();
  const std::size_t cells = static_cast<std::size_t>(s.dim * s.dim);
  Dense identity(cells, 0);
  for (int i = 0; i < s.dim; ++i) identity[static_cast<std::size_t>(i * s.dim + i)] = 1;

  Dense total(cells, 0);
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  std::vector<Dense> partial(static_cast<std::size_t>(m) + 1, Dense(cells, 0));
  partial[0] = identity;
  // Odometer over index tuples; partial[j] holds the product of the first j factors.
  int changed = 0;
  while (true) {
    for (int j = changed; j < m; ++j) {
      Dense& next = partial[static_cast<std::size_t>(j) + 1];
      std::fill(next.begin(), next.end(), 0);
      right_multiply_generator(s, partial[static_cast<std::size_t>(j)], next, idx[static_cast<std::size_t>(j)],
                               idx[static_cast<std::size_t>(alpha[j])], type);
    }
    const Dense& product = partial[static_cast<std::size_t>(m)];
    for (std::size_t c = 0; c < cells; ++c) total[c] += product[c];

    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    // Factor j reads idx[j] and idx[alpha(j)], so a later digit can alter an earlier factor.
    changed = m;
    for (int j = 0; j < m; ++j) {
      if (j >= pos || alpha[j] >= pos) {
        changed = j;
        break;
      }
    }
  }

  RationalMatrix r(s.dim);
  for (int i = 0; i < s.dim; ++i) {
    for (int j = 0; j < s.dim; ++j) r.at(i, j) = Rational(static_cast<long>(total[static_cast<std::size_t>(i * s.dim + j)]));
  }
  return r;
}

RationalMatrix evaluate_on_tensor_power(const Poly& value, int n, int t, LieType type) {
  int dim = 1;
  for (int i = 0; i < t; ++i) dim *= n;
  std::map<std::uint32_t, RationalMatrix> casimir;
  auto casimir_of = [&](std::uint32_t k) -> const RationalMatrix& {
    auto it = casimir.find(k);
    if (it == casimir.end()) {
      it = casimir.emplace(k, word_sum(Permutation::standard_cycle(static_cast<int>(k)), n, t, type)).first;
    }
    return it->second;
  };
  RationalMatrix total(dim);
  for (const auto& [mono, coeff] : value.terms()) {
    Rational scalar = coeff;
    RationalMatrix product = RationalMatrix::identity(dim);
    for (const auto& [var, e] : mono.factors()) {
      if (var.kind() == VarKind::N) {
        for (std::uint32_t i = 0; i < e; ++i) scalar *= n;
      } else if (var.kind() == VarKind::C) {
        for (std::uint32_t i = 0; i < e; ++i) product = product * casimir_of(var.index());
      } else {
        throw std::invalid_argument("oracle values may only involve N and C_k");
      }
    }
    total += scalar * product;
  }
  return total;
}

}  // namespace weightsys
