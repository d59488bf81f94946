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

#ifndef SCORINGCG_NORMAL_PLAY_HPP_
#define SCORINGCG_NORMAL_PLAY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scoringcg/game.hpp"
#include "scoringcg/score.hpp"

namespace scoringcg {

namespace detail {
struct NpNode;
}  // namespace detail

// A short Normal-play game {left | right}; either option set may be empty.
// Hash-consed like Game: equality is structural identity.
class NpGame {
 public:
  // Sorts and deduplicates both option lists.
  static NpGame make(std::vector<NpGame> left, std::vector<NpGame> right);

  std::span<const NpGame> left() const;
  std::span<const NpGame> right() const;
  std::uint64_t id() const;
  std::uint64_t hash() const;
  unsigned birthday() const;

  friend bool operator==(const NpGame& a, const NpGame& b) { return a.node_ == b.node_; }

 private:
  explicit NpGame(const detail::NpNode* node) : node_(node) {}
  friend class NpInterner;

  const detail::NpNode* node_;
};

int compare(const NpGame& a, const NpGame& b);

struct NpStructuralLess {
  bool operator()(const NpGame& a, const NpGame& b) const { return compare(a, b) < 0; }
};

NpGame np_zero();
NpGame np_star();
// n > 0: {n-1 |}; n < 0: {| n+1}; 0: {|}.
NpGame np_integer(int n);
NpGame np_negate(const NpGame& g);
NpGame np_sum(const NpGame& g, const NpGame& h);

enum class Outcome { kLeft, kRight, kNext, kPrevious };

// L > N, L > P, N > R, P > R; N and P are incomparable.
bool outcome_ge(Outcome a, Outcome b);
std::string_view outcome_name(Outcome o);

bool np_left_wins_moving_first(const NpGame& g);
bool np_right_wins_moving_first(const NpGame& g);
Outcome np_outcome(const NpGame& g);

// g >= h iff Right moving first in g - h loses.
bool np_ge(const NpGame& g, const NpGame& h);
bool np_equal(const NpGame& g, const NpGame& h);

bool np_is_number(const NpGame& g);
// Dyadic value of a number form (simplest number between the option values);
// empty if g is not a number.
std::optional<Score> np_number_value(const NpGame& g);

struct NpStops {
  NpGame left;
  NpGame right;
};

// Left and Right stops; both are number forms.
NpStops np_stops(const NpGame& g);

// Representatives of distinct Normal-play values, in order of first
// appearance: 0, then for each day d = 1..max_day the forms {A | B} with A
// and B subsets (of size at most max_subset, 0 = unbounded) of the values
// known after day d-1. A form equal to an earlier value is skipped; the
// search stops once max_values values are known.
std::vector<NpGame> np_representatives(unsigned max_day, std::size_t max_subset,
                                       std::size_t max_values);

// Replaces every empty option set in every follower by the 0-atom.
Game zeta(const NpGame& g);

// zeta of the integer n: a stock of |n| waiting moves for Left (n > 0) or
// Right (n < 0).
Game hat(int n);

}  // namespace scoringcg

template <>
struct std::hash<scoringcg::NpGame> {
  std::size_t operator()(const scoringcg::NpGame& g) const {
    return static_cast<std::size_t>(g.hash());
  }
};

#endif  // SCORINGCG_NORMAL_PLAY_HPP_
