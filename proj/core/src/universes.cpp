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

#include "scoringcg/universes.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "scoringcg/errors.hpp"
#include "scoringcg/memo.hpp"
#include "scoringcg/scores.hpp"

namespace scoringcg {

bool is_left_atomic(const Game& g) { return g.left().is_atom(); }
bool is_right_atomic(const Game& g) { return g.right().is_atom(); }
bool is_atomic(const Game& g) { return is_left_atomic(g) || is_right_atomic(g); }

namespace {

template <class Pred>
bool all_options(const Game& g, Pred&& pred) {
  for (const Side* side : {&g.left(), &g.right()}) {
    for (const Game& o : side->options()) {
      if (!pred(o)) return false;
    }
  }
  return true;
}

struct AtomRange {
  Score min;
  Score max;
};

// Smallest and largest atom score anywhere in g's game tree.
AtomRange atom_range(const Game& g) {
  static MemoTable<std::uint64_t, AtomRange> memo;
  return memo.get_or_compute(g.id(), [&] {
    std::optional<AtomRange> r;
    auto widen = [&r](const Score& lo, const Score& hi) {
      if (!r) {
        r = AtomRange{lo, hi};
      } else {
        r->min = std::min(r->min, lo);
        r->max = std::max(r->max, hi);
      }
    };
    for (const Side* side : {&g.left(), &g.right()}) {
      if (side->is_atom()) {
        widen(side->score(), side->score());
      } else {
        for (const Game& o : side->options()) {
          AtomRange c = atom_range(o);
          widen(c.min, c.max);
        }
      }
    }
    return *r;
  });
}

}  // namespace

bool is_stable(const Game& g) {
  static MemoTable<std::uint64_t, bool> memo;
  return memo.get_or_compute(g.id(), [&] {
    if (is_atomic(g) && left_score(g) > right_score(g)) return false;
    return all_options(g, [](const Game& o) { return is_stable(o); });
  });
}

bool is_guaranteed(const Game& g) {
  static MemoTable<std::uint64_t, bool> memo;
  return memo.get_or_compute(g.id(), [&] {
    if (is_atomic(g)) {
      Score left_max = g.left().is_atom() ? g.left().score()
                                          : std::numeric_limits<Score::Int>::min();
      for (const Game& o : g.left().options()) left_max = std::max(left_max, atom_range(o).max);
      Score right_min = g.right().is_atom() ? g.right().score()
                                            : std::numeric_limits<Score::Int>::max();
      for (const Game& o : g.right().options()) {
        right_min = std::min(right_min, atom_range(o).min);
      }
      if (left_max > right_min) return false;
    }
    return all_options(g, [](const Game& o) { return is_guaranteed(o); });
  });
}

bool is_dicot(const Game& g) {
  static MemoTable<std::uint64_t, bool> memo;
  return memo.get_or_compute(g.id(), [&] {
    if (g.left().is_atom() != g.right().is_atom()) return false;
    return all_options(g, [](const Game& o) { return is_dicot(o); });
  });
}

bool is_stewart(const Game& g) {
  static MemoTable<std::uint64_t, bool> memo;
  return memo.get_or_compute(g.id(), [&] {
    if (g.left().is_atom() && g.right().is_atom()) return g.is_number();
    return all_options(g, [](const Game& o) { return is_stewart(o); });
  });
}

bool satisfies(const Game& g, UniversePredicate predicate) {
  switch (predicate) {
    case UniversePredicate::kAll: return true;
    case UniversePredicate::kGuaranteed: return is_guaranteed(g);
    case UniversePredicate::kStable: return is_stable(g);
    case UniversePredicate::kDicot: return is_dicot(g);
    case UniversePredicate::kStewart: return is_stewart(g);
  }
  return false;
}

std::string_view predicate_name(UniversePredicate predicate) {
  switch (predicate) {
    case UniversePredicate::kAll: return "all";
    case UniversePredicate::kGuaranteed: return "guaranteed";
    case UniversePredicate::kStable: return "stable";
    case UniversePredicate::kDicot: return "dicot";
    case UniversePredicate::kStewart: return "stewart";
  }
  return "?";
}

std::optional<UniversePredicate> parse_predicate(std::string_view name) {
  for (auto p : {UniversePredicate::kAll, UniversePredicate::kGuaranteed,
                 UniversePredicate::kStable, UniversePredicate::kDicot,
                 UniversePredicate::kStewart}) {
    if (predicate_name(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Number of nonempty subsets of an m-set with at most k elements.
std::size_t subset_count(std::size_t m, std::size_t k) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(m, size)
  for (std::size_t size = 1; size <= k && size <= m; ++size) {
    binom = saturating_mul(binom, m - size + 1);
    if (binom != kSaturated) binom /= size;
    total = saturating_add(total, binom);
    if (binom == kSaturated) return kSaturated;
  }
  return total;
}

// Appends every nonempty subset of pool with at most k elements, in order of
// size and then lexicographic index order.
void append_subsets(const std::vector<Game>& pool, std::size_t k, std::vector<Side>& out) {
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= k && size <= pool.size(); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Game> options;
      options.reserve(size);
      for (std::size_t i : idx) options.push_back(pool[i]);
      out.push_back(Side::of(std::move(options)));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

std::vector<Game> enumerate(const UniverseFilter& filter) {
  if (filter.score_set.empty()) throw PreconditionError("score set must be nonempty");
  if (filter.max_day > filter.day_ceiling) {
    throw PreconditionError("max_day " + std::to_string(filter.max_day) +
                            " exceeds the day ceiling " +
                            std::to_string(filter.day_ceiling));
  }
  std::vector<Score> scores = filter.score_set;
  std::sort(scores.begin(), scores.end());
  scores.erase(std::unique(scores.begin(), scores.end()), scores.end());

  std::vector<Game> pool;
  std::unordered_set<std::uint64_t> seen;
  auto consider = [&](const Game& g) {
    if (!seen.insert(g.id()).second) return;
    if (!satisfies(g, filter.predicate)) return;
    if (pool.size() >= filter.max_pool) {
      throw ResourceError("enumerate.max_pool", filter.max_pool);
    }
    pool.push_back(g);
  };

  for (const Score& l : scores) {
    for (const Score& r : scores) consider(Game::make(Side::atom(l), Side::atom(r)));
  }

  for (unsigned day = 1; day <= filter.max_day; ++day) {
    std::size_t k = filter.max_options == 0 ? pool.size() : filter.max_options;
    std::size_t side_count = saturating_add(scores.size(), subset_count(pool.size(), k));
    if (saturating_mul(side_count, side_count) > filter.max_pool) {
      throw ResourceError("enumerate.max_pool (day " + std::to_string(day) +
                              " candidates)",
                          filter.max_pool);
    }
    std::vector<Side> sides;
    sides.reserve(side_count);
    for (const Score& s : scores) sides.push_back(Side::atom(s));
    const std::vector<Game> previous = pool;
    append_subsets(previous, k, sides);
    for (const Side& left : sides) {
      for (const Side& right : sides) consider(Game::make(left, right));
    }
  }
  return pool;
}

}  // namespace scoringcg
