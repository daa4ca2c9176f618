#pragma once

#include <atomic>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weightsys/permutation.hpp"
#include "weightsys/poly.hpp"

namespace weightsys {

// Thread-safe map from canonical permutation to value. Concurrent computations of the
// same key may both run; the first stored value wins, and since evaluation is
// deterministic every caller observes the same result.
class MemoStore {
 public:
  std::optional<Poly> find(const Permutation& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) {
      misses_.fetch_add(1, std::memory_order_relaxed);
      return std::nullopt;
    }
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }

  Poly insert(const Permutation& key, Poly value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(key, std::move(value));
    if (inserted) order_.push_back(key);
    return it->second;
  }

  template <class Compute>
  Poly get_or_compute(const Permutation& key, Compute&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  // Entries in insertion order.
  std::vector<std::pair<Permutation, Poly>> entries() const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<Permutation, Poly>> out;
    out.reserve(order_.size());
    for (const auto& key : order_) out.emplace_back(key, map_.at(key));
    return out;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
    order_.clear();
  }

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, Poly, PermutationHash> map_;
  std::vector<Permutation> order_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace weightsys
