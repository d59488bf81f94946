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

#ifndef SCORINGCG_GAME_HPP_
#define SCORINGCG_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "scoringcg/score.hpp"

namespace scoringcg {

namespace detail {
struct GameNode;
}  // namespace detail

class Game;

// One player's side of a scoring game: either an atom carrying the score that
// is triggered when that player must move and cannot, or a nonempty set of
// options.
class Side {
 public:
  static Side atom(Score score);
  // Sorts and deduplicates. Throws std::invalid_argument on an empty list:
  // an empty move set is always an atom with a score.
  static Side of(std::vector<Game> options);

  bool is_atom() const { return atom_; }
  // Only meaningful for atoms.
  const Score& score() const { return score_; }
  std::span<const Game> options() const { return options_; }

  friend bool operator==(const Side& a, const Side& b);

 private:
  Side() = default;

  bool atom_ = true;
  Score score_{0};
  std::vector<Game> options_;
};

// An immutable, hash-consed scoring game <left | right>. Two handles are
// equal exactly when the games are structurally identical, so equality is a
// pointer comparison and id() is a valid memoization key.
class Game {
 public:
  static Game make(Side left, Side right);
  // <^s | ^s>
  static Game number(Score s);

  const Side& left() const;
  const Side& right() const;

  // Unique per distinct game within a process; assigned in creation order.
  std::uint64_t id() const;
  // Structural hash, deterministic across runs.
  std::uint64_t hash() const;
  unsigned birthday() const;

  bool is_number() const;

  friend bool operator==(const Game& a, const Game& b) { return a.node_ == b.node_; }

 private:
  explicit Game(const detail::GameNode* node) : node_(node) {}
  friend struct detail::GameNode;
  friend class Interner;

  const detail::GameNode* node_;
};

// Total structural order: birthday, then left side, then right side. Atoms
// sort before option sets; atoms by score; option sets lexicographically.
int compare(const Game& a, const Game& b);

struct StructuralLess {
  bool operator()(const Game& a, const Game& b) const { return compare(a, b) < 0; }
};

Game conjugate(const Game& g);
Game sum(const Game& g, const Game& h);
Game sum(std::span<const Game> games);

inline Game operator+(const Game& g, const Game& h) { return sum(g, h); }
inline Game operator~(const Game& g) { return conjugate(g); }

unsigned birthday(const Game& g);
// Longest sequence of moves (by either player, in any order) from g.
unsigned max_play_length(const Game& g);
// Every position reachable by a possibly empty, not necessarily alternating,
// move sequence. g itself comes first; order is a deterministic preorder.
std::vector<Game> followers(const Game& g);
// Number of distinct nodes created so far; a memory metric for benchmarks.
std::size_t interned_game_count();

}  // namespace scoringcg

template <>
struct std::hash<scoringcg::Game> {
  std::size_t operator()(const scoringcg::Game& g) const {
    return static_cast<std::size_t>(g.hash());
  }
};

#endif  // SCORINGCG_GAME_HPP_
