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

#include "scoringcg/game.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "scoringcg/memo.hpp"

namespace scoringcg {

namespace detail {

struct GameNode {
  GameNode(Side l, Side r, std::uint64_t h, std::uint64_t i, unsigned b)
      : left(std::move(l)), right(std::move(r)), hash(h), id(i), birthday(b) {}

  Side left;
  Side right;
  std::uint64_t hash;
  std::uint64_t id;
  unsigned birthday;
};

}  // namespace detail

namespace {

std::uint64_t side_hash(const Side& side) {
  if (side.is_atom()) return hash_combine(1, side.score().hash());
  std::uint64_t h = 2;
  for (const Game& g : side.options()) h = hash_combine(h, g.hash());
  return h;
}

unsigned side_birthday(const Side& side) {
  unsigned b = 0;
  for (const Game& g : side.options()) b = std::max(b, g.birthday() + 1);
  return b;
}

int compare_side(const Side& a, const Side& b) {
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
  if (a.is_atom()) {
    auto c = a.score() <=> b.score();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  auto ao = a.options();
  auto bo = b.options();
  std::size_t n = std::min(ao.size(), bo.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(ao[i], bo[i]); c != 0) return c;
  }
  if (ao.size() == bo.size()) return 0;
  return ao.size() < bo.size() ? -1 : 1;
}

}  // namespace

// Hash-consing table. Nodes are never freed; handles stay valid for the life
// of the process.
class Interner {
 public:
  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  Game intern(Side left, Side right) {
    std::uint64_t h = hash_combine(side_hash(left), side_hash(right));
    std::lock_guard lock(mutex_);
    auto [begin, end] = index_.equal_range(h);
    for (auto it = begin; it != end; ++it) {
      const detail::GameNode* node = it->second;
      if (node->left == left && node->right == right) return Game(node);
    }
    unsigned b = std::max(side_birthday(left), side_birthday(right));
    nodes_.emplace_back(std::move(left), std::move(right), h, nodes_.size(), b);
    const detail::GameNode* node = &nodes_.back();
    index_.emplace(h, node);
    return Game(node);
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return nodes_.size();
  }

 private:
  std::mutex mutex_;
  std::deque<detail::GameNode> nodes_;
  std::unordered_multimap<std::uint64_t, const detail::GameNode*> index_;
};

Side Side::atom(Score score) {
  Side s;
  s.atom_ = true;
  s.score_ = score;
  return s;
}

Side Side::of(std::vector<Game> options) {
  if (options.empty()) {
    throw std::invalid_argument("an option set must be nonempty; use an atom");
  }
  std::sort(options.begin(), options.end(), StructuralLess{});
  options.erase(std::unique(options.begin(), options.end()), options.end());
  Side s;
  s.atom_ = false;
  s.options_ = std::move(options);
  return s;
}

bool operator==(const Side& a, const Side& b) {
  if (a.atom_ != b.atom_) return false;
  if (a.atom_) return a.score_ == b.score_;
  return a.options_ == b.options_;
}

Game Game::make(Side left, Side right) {
  return Interner::instance().intern(std::move(left), std::move(right));
}

Game Game::number(Score s) { return make(Side::atom(s), Side::atom(s)); }

const Side& Game::left() const { return node_->left; }
const Side& Game::right() const { return node_->right; }
std::uint64_t Game::id() const { return node_->id; }
std::uint64_t Game::hash() const { return node_->hash; }
unsigned Game::birthday() const { return node_->birthday; }

bool Game::is_number() const {
  return node_->left.is_atom() && node_->right.is_atom() &&
         node_->left.score() == node_->right.score();
}

int compare(const Game& a, const Game& b) {
  if (a == b) return 0;
  if (a.birthday() != b.birthday()) return a.birthday() < b.birthday() ? -1 : 1;
  if (int c = compare_side(a.left(), b.left()); c != 0) return c;
  return compare_side(a.right(), b.right());
}

namespace {

MemoTable<std::uint64_t, Game>& conjugate_memo() {
  static MemoTable<std::uint64_t, Game> memo;
  return memo;
}

MemoTable<IdPair, Game, IdPairHash>& sum_memo() {
  static MemoTable<IdPair, Game, IdPairHash> memo;
  return memo;
}

Side conjugate_side(const Side& side) {
  if (side.is_atom()) return Side::atom(-side.score());
  std::vector<Game> out;
  out.reserve(side.options().size());
  for (const Game& g : side.options()) out.push_back(conjugate(g));
  return Side::of(std::move(out));
}

// One player's side of g + h: the atom scores add only when both components
// are atomic for that player; otherwise a move is a move in one component.
Side sum_side(const Game& g, const Side& gs, const Game& h, const Side& hs) {
  if (gs.is_atom() && hs.is_atom()) return Side::atom(gs.score() + hs.score());
  std::vector<Game> out;
  out.reserve(gs.options().size() + hs.options().size());
  for (const Game& option : gs.options()) out.push_back(sum(option, h));
  for (const Game& option : hs.options()) out.push_back(sum(g, option));
  return Side::of(std::move(out));
}

}  // namespace

Game conjugate(const Game& g) {
  return conjugate_memo().get_or_compute(g.id(), [&] {
    return Game::make(conjugate_side(g.right()), conjugate_side(g.left()));
  });
}

Game sum(const Game& g, const Game& h) {
  if (g.birthday() == 0 && h.birthday() == 0) {
    return Game::make(Side::atom(g.left().score() + h.left().score()),
                      Side::atom(g.right().score() + h.right().score()));
  }
  IdPair key{std::min(g.id(), h.id()), std::max(g.id(), h.id())};
  return sum_memo().get_or_compute(key, [&] {
    return Game::make(sum_side(g, g.left(), h, h.left()),
                      sum_side(g, g.right(), h, h.right()));
  });
}

Game sum(std::span<const Game> games) {
  Game total = Game::number(0);
  for (const Game& g : games) total = sum(total, g);
  return total;
}

unsigned birthday(const Game& g) { return g.birthday(); }

unsigned max_play_length(const Game& g) {
  static MemoTable<std::uint64_t, unsigned> memo;
  if (g.left().is_atom() && g.right().is_atom()) return 0;
  return memo.get_or_compute(g.id(), [&] {
    unsigned best = 0;
    for (const Side* side : {&g.left(), &g.right()}) {
      for (const Game& option : side->options()) {
        best = std::max(best, 1 + max_play_length(option));
      }
    }
    return best;
  });
}

std::vector<Game> followers(const Game& g) {
  std::vector<Game> out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Game> stack{g};
  while (!stack.empty()) {
    Game cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.id()).second) continue;
    out.push_back(cur);
    for (const Side* side : {&cur.right(), &cur.left()}) {
      auto opts = side->options();
      for (auto it = opts.rbegin(); it != opts.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

std::size_t interned_game_count() { return Interner::instance().size(); }

}  // namespace scoringcg
