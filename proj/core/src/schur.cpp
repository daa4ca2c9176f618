#include "weightsys/schur.hpp"

#include <json.hpp>
#include <map>
#include <mutex>
#include <stdexcept>

#include "weightsys/errors.hpp"
#include "weightsys/series.hpp"
#include "weightsys/wgl.hpp"

namespace weightsys {

namespace {

const Poly kN = Poly::variable(Var::n());

// 1 - (N + shift)/2 u, with shift = +1 or -1
TruncatedSeries half_shift_factor(unsigned order, int shift) {
  return TruncatedSeries::linear(order, Poly(1), -(kN + Poly(shift)) * Rational(1, 2));
}

// 1 + sum_i S_i (u / (1 - (N + shift)/2 u))^i
TruncatedSeries schur_sum(unsigned order, int shift) {
  const TruncatedSeries u = TruncatedSeries::linear(order, Poly(), Poly(1));
  const TruncatedSeries arg = u * half_shift_factor(order, shift).reciprocal();
  TruncatedSeries total = TruncatedSeries::constant(order, Poly(1));
  TruncatedSeries power = TruncatedSeries::constant(order, Poly(1));
  for (unsigned i = 1; i <= order; ++i) {
    power = power * arg;
    total += Poly::variable(Var::s(i)) * power;
  }
  return total;
}

}  // namespace

BasisTable build_basis_table(unsigned order) {
  if (order < 1) throw std::invalid_argument("basis table order must be positive");
  const unsigned n = order + 1;
  // 1 - N u - sum_k C_k u^{k+1} = ((1 - (N+1)u/2) / (1 - (N-1)u/2))^N * sum_{-} / sum_{+}
  const TruncatedSeries ratio = half_shift_factor(n, 1) * half_shift_factor(n, -1).reciprocal();
  const TruncatedSeries rhs = ratio.power(kN) * schur_sum(n, -1) * schur_sum(n, 1).reciprocal();
  if (rhs[0] != Poly(1) || rhs[1] != -kN) throw std::logic_error("Schur series has unexpected low-order terms");

  BasisTable table;
  table.order = order;
  table.c_of_s.resize(order + 1);
  table.s_of_c.resize(order + 1);
  for (unsigned k = 1; k <= order; ++k) table.c_of_s[k] = -rhs[k + 1];

  // C_k = k S_k + (terms in N, S_1..S_{k-1})
  for (unsigned k = 1; k <= order; ++k) {
    const Poly& c = table.c_of_s[k];
    const Var sk = Var::s(k);
    if (c.degree_in(sk) != 1 || c.coefficient_of(sk, 1) != Poly(static_cast<long>(k))) {
      throw std::logic_error("Schur substitution is not triangular");
    }
    std::map<Var, Poly> lower;
    for (unsigned j = 1; j < k; ++j) lower[Var::s(j)] = table.s_of_c[j];
    const Poly rest = c.coefficient_of(sk, 0).substitute(lower);
    table.s_of_c[k] = (Poly::variable(Var::c(k)) - rest) * Rational(1, k);
  }
  return table;
}

const BasisTable& basis_table(unsigned order) {
  static std::mutex mutex;
  static BasisTable cached;
  std::lock_guard lock(mutex);
  if (cached.order < order) cached = build_basis_table(std::max(order, 8U));
  return cached;
}

namespace {

unsigned max_index(const Poly& value, VarKind kind) {
  unsigned k = 0;
  for (const Var& v : value.variables()) {
    if (v.kind() == kind) k = std::max(k, v.index());
  }
  return k;
}

Poly convert(const Poly& value, VarKind from, bool to_schur) {
  const unsigned k = max_index(value, from);
  if (k == 0) return value;
  const BasisTable& table = basis_table(k);
  std::map<Var, Poly> rules;
  for (const Var& v : value.variables()) {
    if (v.kind() != from) continue;
    if (v.index() == 0) throw std::out_of_range("index 0 has no basis conversion");
    rules[v] = to_schur ? table.c_of_s[v.index()] : table.s_of_c[v.index()];
  }
  return value.substitute(rules);
}

}  // namespace

Poly to_schur_basis(const Poly& value) { return convert(value, VarKind::C, true); }

Poly to_casimir_basis(const Poly& value) { return convert(value, VarKind::S, false); }

Poly schur_sign_twist(const Poly& value) {
  std::map<Var, Poly> rules;
  for (const Var& v : value.variables()) {
    if (v.kind() == VarKind::S && v.index() % 2 == 1) rules[v] = -Poly::variable(v);
  }
  return value.substitute(rules);
}

bool inverse_sign_check(const Permutation& alpha) {
  const Poly direct = to_schur_basis(eval_wgl(alpha));
  const Poly inverse = to_schur_basis(eval_wgl(alpha.inverse()));
  const Poly expected = schur_sign_twist(direct) * Rational(alpha.size() % 2 == 0 ? 1 : -1);
  return inverse == expected;
}

Rational pp_casimir(unsigned k, const std::vector<Rational>& sample) {
  const unsigned order = k + 1;
  const Rational n = static_cast<long>(sample.size());
  TruncatedSeries product = TruncatedSeries::constant(order, Poly(1));
  for (const Rational& x : sample) {
    const TruncatedSeries num = TruncatedSeries::linear(order, Poly(1), Poly(Rational(-(x + (n + 1) / 2))));
    const TruncatedSeries den = TruncatedSeries::linear(order, Poly(1), Poly(Rational(-(x + (n - 1) / 2))));
    product = product * num * den.reciprocal();
  }
  return -product[k + 1].constant_term();
}

bool pp_oracle(unsigned k, const std::vector<Rational>& sample) {
  if (k < 1) throw std::invalid_argument("pp_oracle needs k >= 1");
  const BasisTable& table = basis_table(k);
  // h_j(x) from prod 1 / (1 - x_i u)
  TruncatedSeries h = TruncatedSeries::constant(k, Poly(1));
  for (const Rational& x : sample) h = h * TruncatedSeries::linear(k, Poly(1), Poly(Rational(-x))).reciprocal();
  std::map<Var, Rational> values{{Var::n(), Rational(static_cast<long>(sample.size()))}};
  for (unsigned j = 1; j <= k; ++j) values[Var::s(j)] = h[j].constant_term();
  return table.c_of_s[k].evaluate(values) == pp_casimir(k, sample);
}

Poly average_wgl(int m, int bound) {
  if (m > bound) throw BoundExceeded("averaging bound exceeded: m = " + std::to_string(m));
  // Group S_m by cyclic class; w_gl is constant on each class.
  std::map<CyclicClass, long> counts;
  for_each_permutation(m, [&](const Permutation& p) { ++counts[canonical_cyclic_class(p)]; });
  Poly total;
  for (const auto& [cls, count] : counts) total += eval_wgl(cls.canonical) * Rational(count);
  Integer factorial = 1;
  for (int i = 2; i <= m; ++i) factorial *= i;
  return total * Rational(1, factorial);
}

std::vector<std::pair<int, Poly>> schur_average(int m, int bound) {
  const Poly form = to_schur_basis(average_wgl(m, bound));
  std::map<int, Poly> by_gap;
  for (const auto& [mono, c] : form.terms()) {
    int s_degree = 0;
    int s_index = 0;
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : mono.factors()) {
      if (v.kind() == VarKind::S) {
        s_degree += static_cast<int>(e);
        s_index = static_cast<int>(v.index());
      } else {
        rest.emplace_back(v, e);
      }
    }
    if (s_degree > 1) throw std::logic_error("average is not linear in the Schur generators");
    by_gap[m - s_index].add_term(Monomial::from_factors(std::move(rest)), c);
  }
  std::vector<std::pair<int, Poly>> out;
  for (int j = 0; j <= m; ++j) {
    const Poly& coeff = by_gap[j];
    if (j % 2 == 1) {
      if (!coeff.is_zero()) throw std::logic_error("average has an odd gap term");
      continue;
    }
    out.emplace_back(j, coeff);
  }
  if (out.front().second != Poly(1)) throw std::logic_error("average has leading coefficient other than 1");
  return out;
}

std::optional<Poly> averaging_quotient(int m, int two_j, const Poly& coefficient) {
  Poly q = coefficient;
  for (int i = 1; i <= two_j; ++i) {
    // (N + m - i) has root N = i - m
    auto next = divide_by_linear(q, Var::n(), Rational(i - m));
    if (!next) return std::nullopt;
    q = std::move(*next);
  }
  return (two_j / 2) % 2 == 0 ? q : -q;
}

std::vector<Integer> stirling_first_kind(int m) {
  std::vector<Integer> row{1};
  for (int n = 1; n <= m; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1];
      if (k <= n - 1) next[static_cast<std::size_t>(k)] += Integer(n - 1) * row[static_cast<std::size_t>(k)];
    }
    row = std::move(next);
  }
  return row;
}

bool jucys_stirling_check(int m) {
  if (m < 1) throw std::invalid_argument("jucys_stirling_check needs m >= 1");
  std::vector<Integer> counts(static_cast<std::size_t>(m) + 1, 0);
  Poly sum;
  for_each_permutation(m, [&](const Permutation& p) {
    const int f = face_count(p);
    ++counts[static_cast<std::size_t>(f)];
    sum += Poly::variable(Var::n(), static_cast<std::uint32_t>(f - 1));
  });
  Poly product(1);
  for (int i = 1; i < m; ++i) product *= kN + Poly(i);
  return sum == product && counts == stirling_first_kind(m);
}

namespace {

// (e^{v/2} - e^{-v/2}) / v = sum_k v^{2k} / (4^k (2k+1)!)
TruncatedSeries sinh_ratio(unsigned order) {
  TruncatedSeries s(order);
  Integer fact = 1;
  Integer four = 1;
  for (unsigned k = 0; 2 * k <= order; ++k) {
    if (k > 0) {
      fact *= (2 * k) * (2 * k + 1);
      four *= 4;
    }
    s[2 * k] = Poly(Rational(Integer(1), four * fact));
  }
  return s;
}

}  // namespace

FitReport averaging_closed_form_fit(int max_m) {
  if (max_m > 6) throw BoundExceeded("averaging fit bound exceeded");
  FitReport report;
  report.max_m = max_m;
  const int max_j = max_m / 2;
  report.extracted.assign(static_cast<std::size_t>(max_j) + 1, Poly());
  std::vector<bool> seen(static_cast<std::size_t>(max_j) + 1, false);
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& [gap, coeff] : schur_average(m)) {
      auto q = averaging_quotient(m, gap, coeff);
      const std::size_t j = static_cast<std::size_t>(gap / 2);
      if (!q || q->degree_in(Var::n()) > j) {
        report.m_independent = false;
        continue;
      }
      if (!seen[j]) {
        report.extracted[j] = *q;
        seen[j] = true;
      } else if (report.extracted[j] != *q) {
        report.m_independent = false;
      }
    }
  }

  const unsigned order = static_cast<unsigned>(2 * max_j);
  const TruncatedSeries base = sinh_ratio(order);
  for (int sign : {1, -1}) {
    const TruncatedSeries series = base.power((kN - Poly(1)) * Rational(sign));
    for (bool factorial : {false, true}) {
      for (bool alternating : {false, true}) {
        FitCandidate cand;
        cand.exponent_sign = sign;
        cand.factorial = factorial;
        cand.alternating = alternating;
        cand.name = std::string("S(v)^") + (sign > 0 ? "(N-1)" : "(-(N-1))") + (factorial ? ", (2j)! [v^2j]" : ", [v^2j]") +
                    (alternating ? ", (-1)^j" : "");
        cand.matches = true;
        Integer fact = 1;
        for (int j = 0; j <= max_j; ++j) {
          if (j > 0) fact *= (2 * j - 1) * (2 * j);
          Poly a = series[static_cast<unsigned>(2 * j)];
          if (factorial) a *= Rational(fact);
          if (alternating && j % 2 == 1) a = -a;
          cand.predicted.push_back(a);
          if (seen[static_cast<std::size_t>(j)] && a != report.extracted[static_cast<std::size_t>(j)]) cand.matches = false;
        }
        report.candidates.push_back(std::move(cand));
      }
    }
  }

  const Poly nm1 = kN - Poly(1);
  const std::vector<std::pair<int, Poly>> printed = {
      {2, nm1 * Rational(1, 24)},
      {4, nm1 * (Poly(5) * kN - Poly(3)) * Rational(1, 240)},
      {6, nm1 * (Poly(35) * kN * kN - Poly(28) * kN + Poly(9)) * Rational(1, 4032)},
  };
  for (const auto& [two_j, value] : printed) {
    const std::size_t j = static_cast<std::size_t>(two_j / 2);
    if (j >= seen.size() || !seen[j]) continue;
    PrintedClaim claim{two_j, value, report.extracted[j] == value, std::nullopt};
    const Poly& got = report.extracted[j];
    if (!got.is_zero()) {
      const auto& [lead, lead_coeff] = *got.terms().begin();
      const Rational r = value.coefficient(lead) / lead_coeff;
      if (got * r == value) claim.ratio = r;
    }
    report.claims.push_back(std::move(claim));
  }
  return report;
}

std::string FitReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["max_m"] = max_m;
  doc["m_independent"] = m_independent;
  nlohmann::ordered_json ex = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < extracted.size(); ++j) ex.push_back({{"a", 2 * j}, {"value", extracted[j].to_string()}});
  doc["extracted"] = ex;
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  for (const auto& c : candidates) cands.push_back({{"candidate", c.name}, {"matches", c.matches}});
  doc["candidates"] = cands;
  nlohmann::ordered_json claims_json = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json entry{{"a", c.two_j}, {"printed", c.printed.to_string()}, {"matches", c.matches}};
    if (c.ratio) entry["printed_over_extracted"] = weightsys::to_string(*c.ratio);
    claims_json.push_back(std::move(entry));
  }
  doc["printed_claims"] = claims_json;
  return doc.dump(2);
}

}  // namespace weightsys
