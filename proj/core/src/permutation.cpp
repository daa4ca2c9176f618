#include "weightsys/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "weightsys/poly.hpp"

namespace weightsys {

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  const int m = size();
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= m) throw std::invalid_argument("permutation value out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> map(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) map[static_cast<std::size_t>(i)] = i;
  Permutation p;
  p.map_ = std::move(map);
  return p;
}

Permutation Permutation::standard_cycle(int m) {
  Permutation p = identity(m);
  for (int i = 0; i < m; ++i) p.map_[static_cast<std::size_t>(i)] = (i + 1) % m;
  return p;
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> map(static_cast<std::size_t>(m), -1);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int from = cycle[j] - 1;
      const int to = cycle[(j + 1) % cycle.size()] - 1;
      if (from < 0 || from >= m || to < 0 || to >= m) throw std::invalid_argument("cycle element out of range");
      if (map[static_cast<std::size_t>(from)] != -1) throw std::invalid_argument("repeated cycle element");
      map[static_cast<std::size_t>(from)] = to;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (map[static_cast<std::size_t>(i)] == -1) map[static_cast<std::size_t>(i)] = i;
  }
  return Permutation(std::move(map));
}

Permutation Permutation::complete_chords(int n) {
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) cycles.push_back({i, i + n});
  return from_cycles(2 * n, cycles);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(map_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = map_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(map_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = map_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  return count;
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += map_[static_cast<std::size_t>(i)] == i ? 1 : 0;
  return count;
}

bool Permutation::is_standard_cycle() const {
  const int m = size();
  if (m == 0) return false;
  for (int i = 0; i < m; ++i) {
    if (map_[static_cast<std::size_t>(i)] != (i + 1) % m) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < size(); ++i) r.map_[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return r;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r = *this;
  for (int i = 0; i < size(); ++i) r.map_[static_cast<std::size_t>(i)] = map_[static_cast<std::size_t>(other[i])];
  return r;
}

Permutation Permutation::shift_conjugate(int k) const {
  const int m = size();
  if (m == 0) return *this;
  k = ((k % m) + m) % m;
  Permutation r = *this;
  for (int i = 0; i < m; ++i) {
    r.map_[static_cast<std::size_t>(i)] = (map_[static_cast<std::size_t>((i + k) % m)] - k + m) % m;
  }
  return r;
}

Permutation Permutation::conjugate(const Permutation& g) const {
  if (g.size() != size()) throw std::invalid_argument("conjugate: size mismatch");
  Permutation r = *this;
  for (int i = 0; i < size(); ++i) r.map_[static_cast<std::size_t>(g[i])] = g[map_[static_cast<std::size_t>(i)]];
  return r;
}

std::string Permutation::one_line() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(map_[static_cast<std::size_t>(i)] + 1);
  }
  return out + "]";
}

std::string Permutation::cycle_notation() const {
  if (empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(cycle[j] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size()) * 0x9e3779b97f4a7c15ULL;
  for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

namespace {

class PermParser {
 public:
  explicit PermParser(std::string_view text) : text_(text) {}

  Permutation parse() {
    skip_space();
    int declared = -1;
    if (peek() == 'm') {
      ++pos_;
      expect('=');
      declared = number();
      skip_space();
      if (peek() == ':' || peek() == ',') ++pos_;
      skip_space();
    }
    if (peek() == '[') {
      if (declared >= 0) fail("size prefix is only allowed with cycle notation");
      return one_line();
    }
    if (peek() == '(') return cycle_form(declared);
    if (declared >= 0 && pos_ == text_.size()) return Permutation::identity(declared);
    fail("expected '[' or '('");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("permutation: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Permutation one_line() {
    expect('[');
    std::vector<int> values;
    skip_space();
    if (peek() != ']') {
      values.push_back(number() - 1);
      skip_space();
      while (peek() == ',') {
        ++pos_;
        values.push_back(number() - 1);
        skip_space();
      }
    }
    expect(']');
    finish();
    try {
      return Permutation(std::move(values));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("permutation: ") + e.what());
    }
  }

  Permutation cycle_form(int declared) {
    std::vector<std::vector<int>> cycles;
    int largest = 0;
    skip_space();
    while (peek() == '(') {
      ++pos_;
      std::vector<int> cycle;
      skip_space();
      if (peek() != ')') {
        cycle.push_back(number());
        skip_space();
        while (peek() == ',') {
          ++pos_;
          cycle.push_back(number());
          skip_space();
        }
      }
      expect(')');
      for (int v : cycle) {
        if (v < 1) fail("labels start at 1");
        largest = std::max(largest, v);
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_space();
    }
    finish();
    const int m = declared >= 0 ? declared : largest;
    if (largest > m) throw ParseError("permutation: value out of range");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    int count = 0;
    for (const auto& cycle : cycles) {
      for (int v : cycle) {
        if (seen[static_cast<std::size_t>(v - 1)]) throw ParseError("permutation: repeated element " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
        ++count;
      }
    }
    if (declared < 0 && count != m) throw ParseError("permutation: missing elements need an explicit m= prefix");
    return Permutation::from_cycles(m, cycles);
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text) { return PermParser(text).parse(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::multiplicity(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::map<int, int> counts;
  for (int p : parts_) ++counts[p];
  std::string out;
  for (const auto& [part, mult] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(part) + "^" + std::to_string(mult);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  if (s.find('^') != std::string::npos) {
    std::istringstream in(s);
    std::string token;
    while (in >> token) {
      const auto caret = token.find('^');
      if (caret == std::string::npos) throw ParseError("partition: expected part^multiplicity");
      const int part = std::stoi(token.substr(0, caret));
      const int mult = std::stoi(token.substr(caret + 1));
      if (part <= 0 || mult < 0) throw ParseError("partition: bad token " + token);
      for (int i = 0; i < mult; ++i) parts.push_back(part);
    }
  } else {
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    int part = 0;
    while (in >> part) {
      if (part <= 0) throw ParseError("partition: parts must be positive");
      parts.push_back(part);
    }
    if (!in.eof()) throw ParseError("partition: malformed '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

int RotationalClass::size() const {
  int s = 0;
  for (const auto& c : components) s += c.size();
  return s;
}

std::string RotationalClass::to_string() const {
  if (components.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += ",";
    out += components[i].canonical.one_line();
  }
  return out + "}";
}

Partition cycle_type(const Permutation& alpha) {
  std::vector<int> parts;
  for (const auto& c : alpha.cycles()) parts.push_back(static_cast<int>(c.size()));
  return Partition(std::move(parts));
}

int face_count(const Permutation& alpha) {
  const int m = alpha.size();
  if (m == 0) throw std::invalid_argument("face_count of the empty permutation");
  std::vector<int> map(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) map[static_cast<std::size_t>(i)] = (alpha[i] + m - 1) % m;
  return Permutation(std::move(map)).cycle_count();
}

int euler_genus(const Permutation& alpha) {
  const int m = alpha.size();
  const int twice = m - alpha.cycle_count() - face_count(alpha) + 1;
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("genus parity violation");
  return twice / 2;
}

int face_genus(const Permutation& alpha) { return alpha.size() - face_count(alpha) + 2; }

namespace {

// Shortest alpha-invariant proper interval [a, b], leftmost among equals; {-1,-1} if none.
std::pair<int, int> shortest_invariant_interval(const Permutation& alpha) {
  const int m = alpha.size();
  std::pair<int, int> best{-1, -1};
  int best_len = m;
  for (int a = 0; a < m; ++a) {
    int lo = m;
    int hi = -1;
    for (int b = a; b < m && b - a + 1 < best_len; ++b) {
      lo = std::min(lo, alpha[b]);
      hi = std::max(hi, alpha[b]);
      if (lo >= a && hi <= b) {
        best = {a, b};
        best_len = b - a + 1;
        break;
      }
    }
  }
  return best;
}

Permutation restrict_to_interval(const Permutation& alpha, int a, int b, bool inside) {
  std::vector<bool> legs(static_cast<std::size_t>(alpha.size()));
  for (int i = 0; i < alpha.size(); ++i) legs[static_cast<std::size_t>(i)] = ((i >= a && i <= b) == inside);
  return restrict_legs(alpha, legs);
}

}  // namespace

bool is_connected(const Permutation& alpha) {
  if (alpha.empty()) return false;
  return shortest_invariant_interval(alpha).first < 0;
}

std::vector<Permutation> interval_decomposition(const Permutation& alpha) {
  std::vector<Permutation> blocks;
  Permutation rest = alpha;
  while (!rest.empty()) {
    const auto [a, b] = shortest_invariant_interval(rest);
    if (a < 0) {
      blocks.push_back(rest);
      break;
    }
    blocks.push_back(restrict_to_interval(rest, a, b, true));
    rest = restrict_to_interval(rest, a, b, false);
  }
  return blocks;
}

CyclicClass canonical_cyclic_class(const Permutation& alpha) {
  Permutation best = alpha;
  for (int k = 1; k < alpha.size(); ++k) {
    Permutation candidate = alpha.shift_conjugate(k);
    if (candidate.images() < best.images()) best = std::move(candidate);
  }
  return CyclicClass{std::move(best)};
}

RotationalClass canonical_rotational_class(const Permutation& alpha) {
  RotationalClass r;
  for (const auto& block : interval_decomposition(alpha)) r.components.push_back(canonical_cyclic_class(block));
  std::sort(r.components.begin(), r.components.end());
  return r;
}

Permutation restrict_legs(const Permutation& alpha, const std::vector<bool>& legs) {
  const int m = alpha.size();
  if (static_cast<int>(legs.size()) != m) throw std::invalid_argument("restrict_legs: mask size mismatch");
  std::vector<int> label(static_cast<std::size_t>(m), -1);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    if (legs[static_cast<std::size_t>(i)]) label[static_cast<std::size_t>(i)] = k++;
  }
  std::vector<int> map(static_cast<std::size_t>(k));
  for (int i = 0; i < m; ++i) {
    if (!legs[static_cast<std::size_t>(i)]) continue;
    int j = alpha[i];
    while (!legs[static_cast<std::size_t>(j)]) j = alpha[j];
    map[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] = label[static_cast<std::size_t>(j)];
  }
  return Permutation(std::move(map));
}

Permutation restrict_cycles(const Permutation& alpha, const std::vector<int>& cycle_ids) {
  const auto cycles = alpha.cycles();
  std::vector<bool> legs(static_cast<std::size_t>(alpha.size()), false);
  for (int id : cycle_ids) {
    for (int leg : cycles.at(static_cast<std::size_t>(id))) legs[static_cast<std::size_t>(leg)] = true;
  }
  return restrict_legs(alpha, legs);
}

Permutation concatenate(const Permutation& a, const Permutation& b) {
  std::vector<int> map = a.images();
  for (int v : b.images()) map.push_back(v + a.size());
  return Permutation(std::move(map));
}

Permutation concatenate(const std::vector<Permutation>& parts) {
  std::vector<int> map;
  for (const auto& p : parts) {
    const int offset = static_cast<int>(map.size());
    for (int v : p.images()) map.push_back(v + offset);
  }
  return Permutation(std::move(map));
}

Permutation delete_leg(const Permutation& alpha, int leg) {
  std::vector<bool> legs(static_cast<std::size_t>(alpha.size()), true);
  legs.at(static_cast<std::size_t>(leg)) = false;
  return restrict_legs(alpha, legs);
}

int accents(const Permutation& alpha) {
  int count = 0;
  for (int i = 0; i < alpha.size(); ++i) count += alpha[i] > i ? 1 : 0;
  return count;
}

namespace {

int cycle_accents(const Permutation& alpha, const std::vector<int>& cycle) {
  int count = 0;
  for (int v : cycle) count += alpha[v] > v ? 1 : 0;
  return count;
}

}  // namespace

bool is_positive_cycle(const Permutation& alpha, const std::vector<int>& cycle) {
  return cycle.size() <= 1 || cycle_accents(alpha, cycle) == static_cast<int>(cycle.size()) - 1;
}

bool is_negative_cycle(const Permutation& alpha, const std::vector<int>& cycle) {
  return cycle.size() <= 1 || cycle_accents(alpha, cycle) == 1;
}

std::string Monotonicity::name() const {
  if (positive) return "positive";
  if (negative) return "negative";
  if (monotone) return "monotone";
  return "mixed";
}

Monotonicity monotonicity_class(const Permutation& alpha) {
  Monotonicity m{true, true, true};
  for (const auto& cycle : alpha.cycles()) {
    const bool pos = is_positive_cycle(alpha, cycle);
    const bool neg = is_negative_cycle(alpha, cycle);
    m.positive = m.positive && pos;
    m.negative = m.negative && neg;
    m.monotone = m.monotone && (pos || neg);
  }
  return m;
}

void for_each_permutation(int m, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> map(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) map[static_cast<std::size_t>(i)] = i;
  do {
    fn(Permutation(map));
  } while (std::next_permutation(map.begin(), map.end()));
}

void for_each_permutation_with_cycle_lengths(int m, const std::set<int>& allowed, bool increasing_only,
                                             const std::function<void(const Permutation&)>& fn) {
  std::vector<int> map(static_cast<std::size_t>(m), -1);
  std::vector<int> cycle;
  // Builds the cycle through the least unassigned element, then recurses.
  std::function<void(int)> place = [&](int remaining) {
    if (remaining == 0) {
      fn(Permutation(map));
      return;
    }
    int first = 0;
    while (map[static_cast<std::size_t>(first)] != -1) ++first;
    for (int len : allowed) {
      if (len > remaining) continue;
      cycle.assign(1, first);
      map[static_cast<std::size_t>(first)] = first;  // reserve
      std::function<void()> extend = [&]() {
        if (static_cast<int>(cycle.size()) == len) {
          for (std::size_t j = 0; j < cycle.size(); ++j) {
            map[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
          }
          const std::vector<int> saved = cycle;
          place(remaining - len);
          cycle = saved;
          for (std::size_t j = 1; j < cycle.size(); ++j) map[static_cast<std::size_t>(cycle[j])] = -1;
          map[static_cast<std::size_t>(first)] = first;
          return;
        }
        const int start = increasing_only ? cycle.back() + 1 : first + 1;
        for (int v = start; v < m; ++v) {
          if (map[static_cast<std::size_t>(v)] != -1) continue;
          if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
          cycle.push_back(v);
          extend();
          cycle.pop_back();
        }
      };
      extend();
      map[static_cast<std::size_t>(first)] = -1;
    }
  };
  place(m);
}

void for_each_permutation_of_type(const Partition& lambda, const std::function<void(const Permutation&)>& fn) {
  const int m = lambda.weight();
  std::set<int> lengths(lambda.parts().begin(), lambda.parts().end());
  for_each_permutation_with_cycle_lengths(m, lengths, false, [&](const Permutation& p) {
    if (cycle_type(p) == lambda) fn(p);
  });
}

void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      fn(labels, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels[static_cast<std::size_t>(i)] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (n == 0) {
    fn(labels, 0);
    return;
  }
  rec(0, 0);
}

}  // namespace weightsys
