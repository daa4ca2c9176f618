#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "cli/cache.hpp"
#include "weightsys/errors.hpp"
#include "weightsys/hopf.hpp"
#include "weightsys/matrix_oracle.hpp"
#include "weightsys/parallel.hpp"
#include "weightsys/relations.hpp"
#include "weightsys/schur.hpp"
#include "weightsys/wgl.hpp"
#include "weightsys/wso.hpp"

namespace weightsys::cli {

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string engine = "gl";
  std::string output = "text";
  unsigned threads = 1;
  std::string cache_path;
  bool no_cache = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MemoStore& engine_memo(const std::string& engine) {
  return engine == "so" ? default_so_engine().memo() : default_gl_engine().memo();
}

Poly evaluate(const std::string& engine, const Permutation& alpha) {
  return engine == "so" ? eval_wso(alpha) : eval_wgl(alpha);
}

// Loads the cache before a command and appends new values after it.
class CacheSession {
 public:
  CacheSession(const GlobalOptions& g, std::ostream& err) : err_(err) {
    if (g.no_cache) return;
    std::string path = g.cache_path;
    if (path.empty()) {
      if (const char* env = std::getenv("WEIGHTSYS_CACHE")) path = env;
    }
    if (path.empty()) return;
    cache_.emplace(path);
    cache_->load({{"gl", &engine_memo("gl")}, {"so", &engine_memo("so")}});
    if (cache_->skipped() > 0) err_ << "cache: skipped " << cache_->skipped() << " invalid records\n";
  }

  void flush() {
    if (!cache_) return;
    try {
      for (const char* engine : {"gl", "so"}) cache_->save(engine, engine_memo(engine));
    } catch (const std::exception& e) {
      err_ << "cache: " << e.what() << '\n';
    }
  }

 private:
  std::ostream& err_;
  std::optional<ValueCache> cache_;
};

void print_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

ordered_json poly_json(const Poly& p) { return ordered_json::parse(p.to_json()); }

int cmd_eval(const GlobalOptions& g, const std::string& perm_text, const std::string& basis, std::ostream& out) {
  const Permutation alpha = parse_permutation(perm_text);
  Poly value = evaluate(g.engine, alpha);
  if (g.engine == "gl") {
    if (basis == "S") {
      value = to_schur_basis(value);
    } else if (basis == "standard") {
      value = standard_substitution(value);
    } else if (basis == "so-standard") {
      throw UsageError("basis so-standard requires --engine so");
    }
  } else {
    if (basis == "so-standard") {
      value = so_standard_substitution(value);
    } else if (basis != "C") {
      throw UsageError("basis " + basis + " requires --engine gl");
    }
  }
  if (g.output == "json") {
    print_json(out, {{"permutation", alpha.cycle_notation()},
                     {"engine", g.engine},
                     {"basis", basis},
                     {"value", value.to_string()},
                     {"terms", poly_json(value)}});
  } else {
    out << value.to_string() << '\n';
  }
  return kOk;
}

std::string kind_name(RelationKind k) { return k == RelationKind::one_hyper_arc ? "one-hyper-arc" : "two-hyper-arc"; }

int cmd_check_relations(const GlobalOptions& g, int m, int bound, std::ostream& out) {
  RelationOptions options;
  options.bound = bound;
  std::function<Poly(const Permutation&)> f;
  if (g.engine == "face-count") {
    f = face_count_monomial;
  } else {
    if (g.engine == "so" && m > 5) throw BoundExceeded("so relation check is limited to m <= 5");
    const std::string engine = g.engine;
    f = [engine](const Permutation& p) { return evaluate(engine, p); };
  }
  const RelationReport report = check_functional(f, m, options, g.threads);
  if (g.output == "json") {
    ordered_json violations = ordered_json::array();
    for (const auto& [element, value] : report.violations) {
      violations.push_back({{"kind", kind_name(element.kind)},
                            {"source", element.source.cycle_notation()},
                            {"free_leg", element.free_leg + 1},
                            {"value", value.to_string()}});
    }
    print_json(out, {{"engine", g.engine}, {"m", m}, {"elements", report.elements}, {"violations", violations}});
  } else {
    out << "engine " << g.engine << ", m = " << m << ": " << report.elements << " relation elements, "
        << report.violations.size() << " violations\n";
    for (const auto& [element, value] : report.violations) {
      out << "  " << kind_name(element.kind) << ' ' << element.source.cycle_notation() << " leg " << element.free_leg + 1
          << " -> " << value.to_string() << '\n';
    }
  }
  return report.ok() ? kOk : kCheckFailed;
}

struct TableRow {
  int m = 0;
  std::string label;  // partition, or empty for the total row
  std::vector<long> values;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

bool has_unit_part(const Partition& p) { return p.multiplicity(1) > 0; }

Table table_hyper(int bound) {
  if (bound > 7) throw BoundExceeded("table 1 is limited to m <= 7");
  Table t{{"m", "lambda", "dim", "primitive"}, {}};
  for (int m = 1; m <= bound; ++m) {
    std::vector<TableRow> parts;
    long dim = 0;
    long prim = 0;
    for (const Partition& lambda : partitions_of(m)) {
      const DiagramSpace space(lambda, bound);
      const long d = space.dim();
      const long p = space.primitive_dim();
      dim += d;
      prim += p;
      if (!has_unit_part(lambda) || m == 1) parts.push_back({m, lambda.to_string(), {d, p}});
    }
    t.rows.push_back({m, "", {dim, prim}});
    for (auto& r : parts) t.rows.push_back(std::move(r));
  }
  return t;
}

Table table_rotational(int table, int bound) {
  if (bound > 9) throw BoundExceeded("rotational tables are limited to m <= 9");
  std::set<int> parts;
  int step = 1;
  if (table == 2) {
    parts = {2};
    step = 2;
  } else if (table == 3) {
    parts = {3};
    step = 3;
  } else {
    parts = {2, 3};
  }
  Table t;
  if (table == 2) {
    t.columns = {"m", "dim", "primitive"};
  } else {
    t.columns = {"m", "dim", "primitive", "dim_positive", "primitive_positive"};
  }
  for (int m = step; m <= bound; m += step) {
    const RotationalDims all = rotational_dims(m, parts, SignFilter::any, bound);
    TableRow row{m, "", {all.dim, all.primitive}};
    if (table != 2) {
      const RotationalDims pos = rotational_dims(m, parts, SignFilter::positive, bound);
      row.values.push_back(pos.dim);
      row.values.push_back(pos.primitive);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void print_table(const Table& t, const std::string& output, std::ostream& out) {
  const bool labelled = std::find(t.columns.begin(), t.columns.end(), "lambda") != t.columns.end();
  if (output == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json row;
      row["m"] = r.m;
      if (labelled) row["lambda"] = r.label.empty() ? ordered_json(nullptr) : ordered_json(r.label);
      for (std::size_t i = 0; i < r.values.size(); ++i) row[t.columns[i + (labelled ? 2 : 1)]] = r.values[i];
      rows.push_back(row);
    }
    print_json(out, rows);
    return;
  }
  const char sep = output == "csv" ? ',' : '\t';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? std::string(1, sep) : "") << t.columns[i];
  out << '\n';
  for (const auto& r : t.rows) {
    out << r.m;
    if (labelled) out << sep << (r.label.empty() ? "*" : r.label);
    for (long v : r.values) out << sep << v;
    out << '\n';
  }
}

int cmd_dims(const GlobalOptions& g, int table, std::optional<int> bound, std::ostream& out) {
  if (table < 1 || table > 4) throw UsageError("--table must be 1, 2, 3 or 4");
  const int default_bound = table == 1 ? 6 : (table == 2 ? 8 : 9);
  const Table t = table == 1 ? table_hyper(bound.value_or(default_bound)) : table_rotational(table, bound.value_or(default_bound));
  print_table(t, g.output, out);
  return kOk;
}

int cmd_average(const GlobalOptions& g, int m, const std::string& basis, int bound, std::ostream& out) {
  if (basis != "S" && basis != "C") throw UsageError("average supports --basis S or C");
  Poly value = average_wgl(m, bound);
  if (basis == "S") value = to_schur_basis(value);
  if (g.output == "json") {
    ordered_json doc{{"m", m}, {"basis", basis}, {"value", value.to_string()}, {"terms", poly_json(value)}};
    if (basis == "S") {
      ordered_json gaps = ordered_json::array();
      for (const auto& [gap, coeff] : schur_average(m, bound)) {
        const auto q = averaging_quotient(m, gap, coeff);
        gaps.push_back({{"gap", gap}, {"coefficient", coeff.to_string()}, {"quotient", q ? q->to_string() : ""}});
      }
      doc["gaps"] = gaps;
    }
    print_json(out, doc);
  } else {
    out << value.to_string() << '\n';
  }
  return kOk;
}

int cmd_fit_average(int max_m, std::ostream& out) {
  const FitReport report = averaging_closed_form_fit(max_m);
  out << report.to_json() << '\n';
  const bool any = std::any_of(report.candidates.begin(), report.candidates.end(), [](const auto& c) { return c.matches; });
  return report.m_independent && any ? kOk : kCheckFailed;
}

int cmd_oracle(const GlobalOptions& g, int m, int n, int t, std::ostream& out) {
  if (g.engine != "gl" && g.engine != "so") throw UsageError("oracle supports --engine gl or so");
  if (g.engine == "so" && m > 5) throw BoundExceeded("so operator oracle is limited to m <= 5");
  check_oracle_guard(m, n, t);
  std::vector<Permutation> perms;
  for_each_permutation(m, [&](const Permutation& p) { perms.push_back(p); });
  // Warm the memo serially so workers only read it.
  for (const auto& p : perms) evaluate(g.engine, p);
  std::vector<char> ok(perms.size(), 0);
  parallel_for(perms.size(), g.threads, [&](std::size_t i) {
    ok[i] = g.engine == "so" ? operator_oracle_so(perms[i], n, t) : operator_oracle_gl(perms[i], n, t);
  });
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (!ok[i]) failures.push_back(perms[i].cycle_notation());
  }
  if (g.output == "json") {
    print_json(out, {{"engine", g.engine}, {"m", m}, {"N", n}, {"t", t}, {"checked", perms.size()}, {"failures", failures}});
  } else {
    out << "engine " << g.engine << ", m = " << m << ", N = " << n << ", t = " << t << ": " << perms.size()
        << " permutations, " << failures.size() << " failures\n";
    for (const auto& f : failures) out << "  " << f << '\n';
  }
  return failures.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal gl and so weight systems on permutations"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--engine", g.engine, "Weight system")->check(CLI::IsMember({"gl", "so", "face-count"}));
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--cache", g.cache_path, "JSON-lines value cache (default: $WEIGHTSYS_CACHE)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the value cache");

  std::string perm_text;
  std::string basis = "C";
  auto* eval = app.add_subcommand("eval", "Evaluate the weight system on a permutation");
  eval->add_option("permutation", perm_text, "e.g. \"(1,3,2)\", \"[3,1,2]\" or \"m=4 (1,3)\"")->required();
  eval->add_option("--basis", basis, "C, S, standard or so-standard")
      ->check(CLI::IsMember({"C", "S", "standard", "so-standard"}));

  int m = 0;
  int relation_bound = 8;
  auto* relations = app.add_subcommand("check-relations", "Check the generalized Vassiliev relations over S_m");
  relations->add_option("m", m)->required()->check(CLI::PositiveNumber);
  relations->add_option("--bound", relation_bound, "Largest accepted m");

  int table = 1;
  std::optional<int> dims_bound;
  auto* dims = app.add_subcommand("dims", "Dimension tables of the Hopf algebras");
  dims->add_option("--table", table, "1: hyper chord diagrams; 2-4: rotational algebras")->required();
  dims->add_option("--bound", dims_bound, "Largest m");

  int average_bound = 6;
  std::string average_basis = "S";
  auto* average = app.add_subcommand("average", "Average of w_gl over S_m");
  average->add_option("m", m)->required()->check(CLI::PositiveNumber);
  average->add_option("--basis", average_basis, "S or C")->check(CLI::IsMember({"S", "C"}));
  average->add_option("--bound", average_bound, "Largest accepted m");

  int max_m = 6;
  auto* fit = app.add_subcommand("fit-average", "Extract the averaging coefficients and test closed forms");
  fit->add_option("--max-m", max_m)->check(CLI::Range(2, 6));

  int n = 2;
  int t = 1;
  auto* oracle = app.add_subcommand("oracle", "Compare against explicit matrices on tensor powers");
  oracle->add_option("m", m)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--N", n, "Matrix size")->check(CLI::PositiveNumber);
  oracle->add_option("--t", t, "Tensor power")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  CacheSession cache(g, err);
  try {
    int code = kOk;
    if (g.engine == "face-count" && !relations->parsed()) throw UsageError("--engine face-count only applies to check-relations");
    if (eval->parsed()) {
      code = cmd_eval(g, perm_text, basis, out);
    } else if (relations->parsed()) {
      code = cmd_check_relations(g, m, relation_bound, out);
    } else if (dims->parsed()) {
      code = cmd_dims(g, table, dims_bound, out);
    } else if (average->parsed()) {
      code = cmd_average(g, m, average_basis, average_bound, out);
    } else if (fit->parsed()) {
      code = cmd_fit_average(max_m, out);
    } else if (oracle->parsed()) {
      code = cmd_oracle(g, m, n, t, out);
    }
    cache.flush();
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kBound;
  }
}

}  // namespace weightsys::cli
