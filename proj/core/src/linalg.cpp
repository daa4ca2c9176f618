#include "weightsys/linalg.hpp"

#include <algorithm>
#include <map>

namespace weightsys {

SparseRow integer_row(const std::vector<std::pair<int, Rational>>& entries) {
  std::map<int, Rational> merged;
  for (const auto& [col, v] : entries) merged[col] += v;
  Integer lcm = 1;
  for (const auto& [col, v] : merged) {
    if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  SparseRow row;
  for (const auto& [col, v] : merged) {
    if (v == 0) continue;
    Integer scaled = v.get_num() * (lcm / v.get_den());
    row.emplace_back(col, std::move(scaled));
  }
  return row;
}

namespace {

void normalize_content(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& entry : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.second.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& entry : row) mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
  }
}

// a*row - b*pivot, dropping the cancelled leading entry.
SparseRow combine(const SparseRow& row, const Integer& a, const SparseRow& pivot, const Integer& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Integer v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow row) const {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
  normalize_content(row);
  while (!row.empty()) {
    const int lead = row.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                               [](const auto& p, int col) { return p.first < col; });
    if (it == pivots_.end() || it->first != lead) break;
    const SparseRow& pivot = rows_[it->second];
    Integer g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    const Integer a = pivot.front().second / g;
    const Integer b = row.front().second / g;
    row = combine(row, a, pivot, b);
    normalize_content(row);
  }
  return row;
}

bool RowEchelon::add(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const int lead = row.front().first;
  rows_.push_back(std::move(row));
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                             [](const auto& p, int col) { return p.first < col; });
  pivots_.insert(it, {lead, rows_.size() - 1});
  return true;
}

bool RowEchelon::in_span(SparseRow row) const { return reduce(std::move(row)).empty(); }

int exact_rank(const std::vector<SparseRow>& rows) {
  RowEchelon echelon;
  for (const auto& row : rows) echelon.add(row);
  return echelon.rank();
}

int modular_rank(const std::vector<SparseRow>& rows, std::uint64_t prime) {
  __extension__ typedef unsigned __int128 u128;
  auto mod_of = [prime](const Integer& v) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), prime);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  auto mul = [prime](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((u128)a * b % prime); };
  auto inv = [&](std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t e = prime - 2;
    while (e > 0) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return result;
  };
  std::map<int, std::map<int, std::uint64_t>> pivots;  // lead column -> monic row
  for (const auto& r : rows) {
    std::map<int, std::uint64_t> row;
    for (const auto& [col, v] : r) {
      const auto x = mod_of(v);
      if (x != 0) row[col] = x;
    }
    while (!row.empty()) {
      const int lead = row.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        const auto scale = inv(row.begin()->second);
        for (auto& entry : row) entry.second = mul(entry.second, scale);
        pivots.emplace(lead, std::move(row));
        break;
      }
      const auto factor = row.begin()->second;
      for (const auto& [col, v] : p->second) {
        auto& slot = row[col];
        slot = (slot + prime - mul(factor, v)) % prime;
        if (slot == 0) row.erase(col);
      }
    }
  }
  return static_cast<int>(pivots.size());
}

}  // namespace weightsys
