#include "weightsys/poly.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>

namespace weightsys {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

char kind_letter(VarKind k) {
  switch (k) {
    case VarKind::N: return 'N';
    case VarKind::C: return 'C';
    case VarKind::S: return 'S';
    case VarKind::p: return 'p';
    case VarKind::x: return 'x';
    case VarKind::aux: return 'a';
  }
  return '?';
}

Rational parse_rational(std::string_view s) {
  Rational q;
  if (s.empty() || q.set_str(std::string(s), 10) != 0) {
    throw ParseError("invalid rational: '" + std::string(s) + "'");
  }
  q.canonicalize();
  if (q.get_den() == 0) throw ParseError("zero denominator");
  return q;
}

}  // namespace

std::string Var::name() const {
  if (kind_ == VarKind::N) return "N";
  return std::string(1, kind_letter(kind_)) + "_" + std::to_string(index_);
}

Var Var::parse(std::string_view name) {
  if (name == "N") return Var::n();
  if (name.size() < 3 || name[1] != '_') throw ParseError("unknown variable: '" + std::string(name) + "'");
  std::uint32_t index = 0;
  for (char ch : name.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad variable index: '" + std::string(name) + "'");
    index = index * 10 + static_cast<std::uint32_t>(ch - '0');
  }
  switch (name[0]) {
    case 'C': return Var::c(index);
    case 'S': return Var::s(index);
    case 'p': return Var::p(index);
    case 'x': return Var::x(index);
    case 'a': return Var::aux(index);
    default: throw ParseError("unknown variable: '" + std::string(name) + "'");
  }
}

Monomial::Monomial(Var v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (const auto& f : factors_) {
    if (f.first == v) return f.second;
  }
  return 0;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != v) m.factors_.push_back(f);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

Poly Poly::variable(Var v, std::uint32_t exponent) { return term(Monomial(v, exponent), 1); }

Poly Poly::term(const Monomial& m, const Rational& coeff) {
  Poly p;
  p.add_term(m, coeff);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& entry : terms_) entry.second *= scalar;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& entry : r.terms_) entry.second = -entry.second;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::substitute(const std::map<Var, Poly>& rules) const {
  // Powers of each rule are cached so repeated exponents are multiplied once.
  std::map<Var, std::vector<Poly>> powers;
  auto power_of = [&](Var v, std::uint32_t e) -> const Poly& {
    auto& list = powers[v];
    if (list.empty()) list.push_back(Poly(1));
    while (list.size() <= e) list.push_back(list.back() * rules.at(v));
    return list[e];
  };
  Poly result;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> kept;
    Poly factor = Poly(c);
    for (const auto& [v, e] : m.factors()) {
      if (rules.count(v)) {
        factor = factor * power_of(v, e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    if (!kept.empty()) factor = factor * Poly::term(Monomial::from_factors(std::move(kept)), 1);
    result += factor;
  }
  return result;
}

Poly Poly::coefficient_of(Var v, std::uint32_t e) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) == e) r.add_term(m.without(v), c);
  }
  return r;
}

std::uint32_t Poly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& entry : terms_) d = std::max(d, entry.first.exponent(v));
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& entry : terms_) d = std::max(d, entry.first.degree());
  return d;
}

std::set<Var> Poly::variables() const {
  std::set<Var> vars;
  for (const auto& entry : terms_) {
    for (const auto& f : entry.first.factors()) vars.insert(f.first);
  }
  return vars;
}

Rational Poly::evaluate(const std::map<Var, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + v.name());
      for (std::uint32_t i = 0; i < e; ++i) t *= it->second;
    }
    total += t;
  }
  return total;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly total;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Poly t = product();
    total += negative ? -t : t;
    while (true) {
      if (accept('+')) {
        total += product();
      } else if (accept('-')) {
        total -= product();
      } else {
        break;
      }
    }
    return total;
  }

  Poly product() {
    Poly p = power();
    while (accept('*')) p = p * power();
    return p;
  }

  std::uint32_t exponent() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) fail("expected denominator");
      }
      return Poly(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return Poly::variable(Var::parse(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (m.empty()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << monomial_text(m);
    }
    first = false;
  }
  return out.str();
}

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::string Poly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.factors()) mono[v.name()] = e;
    arr.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
  }
  return arr.dump();
}

Poly Poly::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("polynomial JSON must be an array");
  Poly p;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("coeff") || !entry.contains("monomial")) {
      throw ParseError("polynomial JSON term needs 'coeff' and 'monomial'");
    }
    const auto& coeff = entry.at("coeff");
    if (!coeff.is_string()) throw ParseError("'coeff' must be a string");
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, exp] : entry.at("monomial").items()) {
      if (!exp.is_number_unsigned()) throw ParseError("exponent must be a nonnegative integer");
      factors.emplace_back(Var::parse(name), exp.get<std::uint32_t>());
    }
    p.add_term(Monomial::from_factors(std::move(factors)), parse_rational(coeff.get<std::string>()));
  }
  return p;
}

Poly laurent_coefficient(const Poly& p, Var v, int shift, int target) {
  const int e = target - shift;
  if (e < 0) return Poly();
  return p.coefficient_of(v, static_cast<std::uint32_t>(e));
}

std::optional<Poly> divide_by_linear(const Poly& p, Var v, const Rational& root) {
  // Synthetic division with coefficients that are polynomials in the other variables.
  const std::uint32_t d = p.degree_in(v);
  std::vector<Poly> coeffs(d + 1);
  for (std::uint32_t e = 0; e <= d; ++e) coeffs[e] = p.coefficient_of(v, e);
  if (d == 0) {
    if (coeffs[0].is_zero()) return Poly();
    return std::nullopt;
  }
  std::vector<Poly> quotient(d);
  Poly carry;
  for (std::uint32_t e = d; e >= 1; --e) {
    carry = coeffs[e] + carry * root;
    quotient[e - 1] = carry;
  }
  if (!(coeffs[0] + carry * root).is_zero()) return std::nullopt;
  Poly q;
  for (std::uint32_t e = 0; e < d; ++e) q += quotient[e] * Poly::variable(v, e);
  return q;
}

Poly falling_factorial(Var v, long a, unsigned j) {
  Poly r(1);
  for (unsigned i = 0; i < j; ++i) r *= Poly::variable(v) + Poly(a - static_cast<long>(i));
  return r;
}

}  // namespace weightsys
