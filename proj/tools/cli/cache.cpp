#include "cli/cache.hpp"

#include <fstream>
#include <json.hpp>

#include "weightsys/errors.hpp"
#include "weightsys/permutation.hpp"

namespace weightsys::cli {

using nlohmann::json;

std::size_t ValueCache::load(const std::map<std::string, MemoStore*>& memos) {
  std::ifstream in(path_);
  if (!in) return 0;
  std::size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json record = json::parse(line);
      if (record.at("version").get<std::string>() != kCacheVersion) {
        ++skipped_;
        continue;
      }
      const std::string record_engine = record.at("engine").get<std::string>();
      const std::string key = record.at("key").get<std::string>();
      const auto memo = memos.find(record_engine);
      if (memo == memos.end()) {
        ++skipped_;
        continue;
      }
      const Permutation perm = parse_permutation(key);
      const Permutation canonical = canonical_cyclic_class(perm).canonical;
      if (canonical != perm) {
        ++skipped_;
        continue;
      }
      memo->second->insert(canonical, Poly::from_json(record.at("value").dump()));
      known_.emplace(record_engine, key);
      ++loaded;
    } catch (const std::exception&) {
      ++skipped_;
    }
  }
  return loaded;
}

std::size_t ValueCache::save(const std::string& engine, const MemoStore& memo) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path_.string());
  std::size_t written = 0;
  for (const auto& [perm, value] : memo.entries()) {
    const Permutation canonical = canonical_cyclic_class(perm).canonical;
    if (canonical != perm) continue;
    const std::string key = canonical.one_line();
    if (!known_.emplace(engine, key).second) continue;
    nlohmann::ordered_json record;
    record["key"] = key;
    record["value"] = json::parse(value.to_json());
    record["engine"] = engine;
    record["version"] = kCacheVersion;
    out << record.dump() << '\n';
    ++written;
  }
  return written;
}

}  // namespace weightsys::cli
