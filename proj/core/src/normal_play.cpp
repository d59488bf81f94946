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

#include "scoringcg/normal_play.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "scoringcg/memo.hpp"

namespace scoringcg {

namespace detail {

struct NpNode {
  NpNode(std::vector<NpGame> l, std::vector<NpGame> r, std::uint64_t h,
         std::uint64_t i, unsigned b)
      : left(std::move(l)), right(std::move(r)), hash(h), id(i), birthday(b) {}

  std::vector<NpGame> left;
  std::vector<NpGame> right;
  std::uint64_t hash;
  std::uint64_t id;
  unsigned birthday;
};

}  // namespace detail

namespace {

std::uint64_t list_hash(std::uint64_t seed, std::span<const NpGame> games) {
  std::uint64_t h = seed;
  for (const NpGame& g : games) h = hash_combine(h, g.hash());
  return hash_combine(h, games.size());
}

}  // namespace

class NpInterner {
 public:
  static NpInterner& instance() {
    static NpInterner interner;
    return interner;
  }

  NpGame intern(std::vector<NpGame> left, std::vector<NpGame> right) {
    std::uint64_t h = hash_combine(list_hash(3, left), list_hash(5, right));
    std::lock_guard lock(mutex_);
    auto [begin, end] = index_.equal_range(h);
    for (auto it = begin; it != end; ++it) {
      if (it->second->left == left && it->second->right == right) {
        return NpGame(it->second);
      }
    }
    unsigned b = 0;
    for (const NpGame& g : left) b = std::max(b, g.birthday() + 1);
    for (const NpGame& g : right) b = std::max(b, g.birthday() + 1);
    nodes_.emplace_back(std::move(left), std::move(right), h, nodes_.size(), b);
    const detail::NpNode* node = &nodes_.back();
    index_.emplace(h, node);
    return NpGame(node);
  }

 private:
  std::mutex mutex_;
  std::deque<detail::NpNode> nodes_;
  std::unordered_multimap<std::uint64_t, const detail::NpNode*> index_;
};

NpGame NpGame::make(std::vector<NpGame> left, std::vector<NpGame> right) {
  for (auto* list : {&left, &right}) {
    std::sort(list->begin(), list->end(), NpStructuralLess{});
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return NpInterner::instance().intern(std::move(left), std::move(right));
}

std::span<const NpGame> NpGame::left() const { return node_->left; }
std::span<const NpGame> NpGame::right() const { return node_->right; }
std::uint64_t NpGame::id() const { return node_->id; }
std::uint64_t NpGame::hash() const { return node_->hash; }
unsigned NpGame::birthday() const { return node_->birthday; }

namespace {

int compare_list(std::span<const NpGame> a, std::span<const NpGame> b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace

int compare(const NpGame& a, const NpGame& b) {
  if (a == b) return 0;
  if (a.birthday() != b.birthday()) return a.birthday() < b.birthday() ? -1 : 1;
  if (int c = compare_list(a.left(), b.left()); c != 0) return c;
  return compare_list(a.right(), b.right());
}

NpGame np_zero() { return NpGame::make({}, {}); }
NpGame np_star() { return NpGame::make({np_zero()}, {np_zero()}); }

NpGame np_integer(int n) {
  NpGame g = np_zero();
  for (int i = 0; i < n; ++i) g = NpGame::make({g}, {});
  for (int i = 0; i > n; --i) g = NpGame::make({}, {g});
  return g;
}

NpGame np_negate(const NpGame& g) {
  static MemoTable<std::uint64_t, NpGame> memo;
  return memo.get_or_compute(g.id(), [&] {
    std::vector<NpGame> left, right;
    for (const NpGame& r : g.right()) left.push_back(np_negate(r));
    for (const NpGame& l : g.left()) right.push_back(np_negate(l));
    return NpGame::make(std::move(left), std::move(right));
  });
}

NpGame np_sum(const NpGame& g, const NpGame& h) {
  static MemoTable<IdPair, NpGame, IdPairHash> memo;
  if (g.birthday() == 0) return h;
  if (h.birthday() == 0) return g;
  IdPair key{std::min(g.id(), h.id()), std::max(g.id(), h.id())};
  return memo.get_or_compute(key, [&] {
    std::vector<NpGame> left, right;
    for (const NpGame& o : g.left()) left.push_back(np_sum(o, h));
    for (const NpGame& o : h.left()) left.push_back(np_sum(g, o));
    for (const NpGame& o : g.right()) right.push_back(np_sum(o, h));
    for (const NpGame& o : h.right()) right.push_back(np_sum(g, o));
    return NpGame::make(std::move(left), std::move(right));
  });
}

bool outcome_ge(Outcome a, Outcome b) {
  if (a == b || a == Outcome::kLeft || b == Outcome::kRight) return true;
  return false;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kLeft: return "L";
    case Outcome::kRight: return "R";
    case Outcome::kNext: return "N";
    case Outcome::kPrevious: return "P";
  }
  return "?";
}

bool np_left_wins_moving_first(const NpGame& g) {
  static MemoTable<std::uint64_t, bool> memo;
  if (g.left().empty()) return false;
  return memo.get_or_compute(g.id(), [&] {
    return std::any_of(g.left().begin(), g.left().end(), [](const NpGame& o) {
      return !np_right_wins_moving_first(o);
    });
  });
}

bool np_right_wins_moving_first(const NpGame& g) {
  static MemoTable<std::uint64_t, bool> memo;
  if (g.right().empty()) return false;
  return memo.get_or_compute(g.id(), [&] {
    return std::any_of(g.right().begin(), g.right().end(), [](const NpGame& o) {
      return !np_left_wins_moving_first(o);
    });
  });
}

Outcome np_outcome(const NpGame& g) {
  bool lf = np_left_wins_moving_first(g);
  bool rf = np_right_wins_moving_first(g);
  if (lf && rf) return Outcome::kNext;
  if (lf) return Outcome::kLeft;
  if (rf) return Outcome::kRight;
  return Outcome::kPrevious;
}

bool np_ge(const NpGame& g, const NpGame& h) {
  return !np_right_wins_moving_first(np_sum(g, np_negate(h)));
}

bool np_equal(const NpGame& g, const NpGame& h) { return np_ge(g, h) && np_ge(h, g); }

bool np_is_number(const NpGame& g) {
  static MemoTable<std::uint64_t, bool> memo;
  return memo.get_or_compute(g.id(), [&] {
    for (const NpGame& l : g.left()) {
      if (!np_is_number(l)) return false;
    }
    for (const NpGame& r : g.right()) {
      if (!np_is_number(r)) return false;
    }
    for (const NpGame& l : g.left()) {
      for (const NpGame& r : g.right()) {
        // l < r
        if (!np_ge(r, l) || np_ge(l, r)) return false;
      }
    }
    return true;
  });
}

namespace {

Score floor_score(const Score& s) {
  Score::Int q = s.numerator() / s.denominator();
  if (s.numerator() < 0 && q * s.denominator() != s.numerator()) --q;
  return Score(q);
}

// Simplest dyadic strictly between lo and hi (either bound may be absent).
Score simplest_between(const std::optional<Score>& lo, const std::optional<Score>& hi) {
  if ((!lo || *lo < 0) && (!hi || *hi > 0)) return Score(0);
  if (lo && *lo >= 0) {
    Score n = floor_score(*lo) + 1;
    if (!hi || n < *hi) return n;
  } else {
    Score n = -(floor_score(-*hi) + 1);
    if (!lo || n > *lo) return n;
  }
  // No integer fits; both bounds are present and share an integer interval.
  for (Score::Int den = 2;; den *= 2) {
    Score scaled = *lo * Score(den);
    Score k = floor_score(scaled) + 1;
    Score candidate = k / Score(den);
    if (candidate < *hi) return candidate;
  }
}

}  // namespace

std::optional<Score> np_number_value(const NpGame& g) {
  if (!np_is_number(g)) return std::nullopt;
  std::optional<Score> lo, hi;
  for (const NpGame& l : g.left()) {
    Score v = *np_number_value(l);
    if (!lo || v > *lo) lo = v;
  }
  for (const NpGame& r : g.right()) {
    Score v = *np_number_value(r);
    if (!hi || v < *hi) hi = v;
  }
  return simplest_between(lo, hi);
}

namespace {

NpStops compute_stops(const NpGame& g) {
  static MemoTable<std::uint64_t, std::pair<NpGame, NpGame>> memo;
  auto p = memo.get_or_compute(g.id(), [&]() -> std::pair<NpGame, NpGame> {
    if (np_is_number(g)) return {g, g};
    if (g.left().empty() || g.right().empty()) {
      // A game with an empty option set equals an integer no larger in
      // magnitude than its birthday.
      int bound = static_cast<int>(g.birthday());
      for (int n = -bound; n <= bound; ++n) {
        NpGame k = np_integer(n);
        if (np_equal(g, k)) return {k, k};
      }
      throw std::logic_error("one-sided game not equal to an integer");
    }
    std::optional<NpGame> ls, rs;
    std::optional<Score> ls_value, rs_value;
    for (const NpGame& l : g.left()) {
      NpGame stop = compute_stops(l).right;
      Score v = *np_number_value(stop);
      if (!ls_value || v > *ls_value) {
        ls_value = v;
        ls = stop;
      }
    }
    for (const NpGame& r : g.right()) {
      NpGame stop = compute_stops(r).left;
      Score v = *np_number_value(stop);
      if (!rs_value || v < *rs_value) {
        rs_value = v;
        rs = stop;
      }
    }
    return {*ls, *rs};
  });
  return {p.first, p.second};
}

}  // namespace

NpStops np_stops(const NpGame& g) { return compute_stops(g); }

Game zeta(const NpGame& g) {
  static MemoTable<std::uint64_t, Game> memo;
  return memo.get_or_compute(g.id(), [&] {
    auto side = [](std::span<const NpGame> options) {
      if (options.empty()) return Side::atom(0);
      std::vector<Game> out;
      out.reserve(options.size());
      for (const NpGame& o : options) out.push_back(zeta(o));
      return Side::of(std::move(out));
    };
    return Game::make(side(g.left()), side(g.right()));
  });
}

Game hat(int n) { return zeta(np_integer(n)); }

namespace {

// All subsets of xs with at most k elements (k = 0: any size), by size and
// then lexicographically by index.
std::vector<std::vector<NpGame>> small_subsets(const std::vector<NpGame>& xs, std::size_t k) {
  std::size_t limit = k == 0 ? xs.size() : std::min(k, xs.size());
  std::vector<std::vector<NpGame>> out{{}};
  for (std::size_t size = 1; size <= limit; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<NpGame> subset;
      for (std::size_t i : idx) subset.push_back(xs[i]);
      out.push_back(std::move(subset));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == xs.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<NpGame> np_representatives(unsigned max_day, std::size_t max_subset,
                                       std::size_t max_values) {
  std::vector<NpGame> reps{np_zero()};
  for (unsigned day = 1; day <= max_day && reps.size() < max_values; ++day) {
    std::vector<std::vector<NpGame>> subsets = small_subsets(reps, max_subset);
    for (const auto& left : subsets) {
      for (const auto& right : subsets) {
        if (reps.size() >= max_values) return reps;
        NpGame candidate = NpGame::make(left, right);
        bool known = std::any_of(reps.begin(), reps.end(),
                                 [&](const NpGame& r) { return np_equal(r, candidate); });
        if (!known) reps.push_back(candidate);
      }
    }
  }
  return reps;
}

}  // namespace scoringcg
