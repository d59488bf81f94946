// Copyright 2026 The scoringcg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCORINGCG_MEMO_HPP_
#define SCORINGCG_MEMO_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace scoringcg {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (value + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2)));
}

struct IdPair {
  std::uint64_t first;
  std::uint64_t second;
  friend bool operator==(const IdPair&, const IdPair&) = default;
};

struct IdPairHash {
  std::size_t operator()(const IdPair& p) const {
    return static_cast<std::size_t>(hash_combine(mix64(p.first), p.second));
  }
};

// Thread-safe idempotent cache. Values are pure functions of their keys, so a
// racing double computation is harmless; the first inserted value wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoTable {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, std::forward<Fn>(compute)());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace scoringcg

#endif  // SCORINGCG_MEMO_HPP_
