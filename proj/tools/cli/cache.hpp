#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "weightsys/memo.hpp"

namespace weightsys::cli {

inline constexpr const char* kCacheVersion = "weightsys-cache-1";

// Append-only JSON-lines store of weight-system values, one record per line:
// {"key": one-line canonical class, "value": [...terms], "engine": "gl"|"so", "version": ...}
class ValueCache {
 public:
  explicit ValueCache(std::filesystem::path path) : path_(std::move(path)) {}

  // Seeds each engine's memo with its valid records in one pass over the file. Records
  // with a different version, an unknown engine, a non-canonical key or an unparsable
  // value are skipped.
  std::size_t load(const std::map<std::string, MemoStore*>& memos);
  // Appends memo entries not already on disk. Returns the number written.
  std::size_t save(const std::string& engine, const MemoStore& memo);

  std::size_t skipped() const { return skipped_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::set<std::pair<std::string, std::string>> known_;  // (engine, key)
  std::size_t skipped_ = 0;
};

}  // namespace weightsys::cli
