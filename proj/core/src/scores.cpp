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

#include "scoringcg/scores.hpp"

#include "scoringcg/memo.hpp"
#include "scoringcg/normal_play.hpp"

namespace scoringcg {

namespace {

MemoTable<std::uint64_t, Score>& ls_memo() {
  static MemoTable<std::uint64_t, Score> memo;
  return memo;
}

MemoTable<std::uint64_t, Score>& rs_memo() {
  static MemoTable<std::uint64_t, Score> memo;
  return memo;
}

}  // namespace

Score left_score(const Game& g) {
  if (g.left().is_atom()) return g.left().score();
  return ls_memo().get_or_compute(g.id(), [&] {
    auto opts = g.left().options();
    Score best = right_score(opts[0]);
    for (std::size_t i = 1; i < opts.size(); ++i) {
      Score s = right_score(opts[i]);
      if (s > best) best = s;
    }
    return best;
  });
}

Score right_score(const Game& g) {
  if (g.right().is_atom()) return g.right().score();
  return rs_memo().get_or_compute(g.id(), [&] {
    auto opts = g.right().options();
    Score best = left_score(opts[0]);
    for (std::size_t i = 1; i < opts.size(); ++i) {
      Score s = left_score(opts[i]);
      if (s < best) best = s;
    }
    return best;
  });
}

ScorePair scores(const Game& g) { return {left_score(g), right_score(g)}; }

std::optional<Game> best_left_option(const Game& g) {
  if (g.left().is_atom()) return std::nullopt;
  Score target = left_score(g);
  // Options are stored in structural order, so the first hit is the smallest.
  for (const Game& option : g.left().options()) {
    if (right_score(option) == target) return option;
  }
  return std::nullopt;
}

std::optional<Game> best_right_option(const Game& g) {
  if (g.right().is_atom()) return std::nullopt;
  Score target = right_score(g);
  for (const Game& option : g.right().options()) {
    if (left_score(option) == target) return option;
  }
  return std::nullopt;
}

PassAllowedScore pass_allowed_left(const Game& g) {
  static MemoTable<std::uint64_t, PassAllowedScore> memo;
  return memo.get_or_compute(g.id(), [&] {
    unsigned bound = max_play_length(g);
    PassAllowedScore best{left_score(g), 0};
    for (unsigned n = 1; n <= bound; ++n) {
      Score s = left_score(g + hat(-static_cast<int>(n)));
      if (s < best.value) best = {s, n};
    }
    return best;
  });
}

PassAllowedScore pass_allowed_right(const Game& g) {
  static MemoTable<std::uint64_t, PassAllowedScore> memo;
  return memo.get_or_compute(g.id(), [&] {
    unsigned bound = max_play_length(g);
    PassAllowedScore best{right_score(g), 0};
    for (unsigned n = 1; n <= bound; ++n) {
      Score s = right_score(g + hat(static_cast<int>(n)));
      if (s > best.value) best = {s, n};
    }
    return best;
  });
}

Score pass_allowed_left_score(const Game& g) { return pass_allowed_left(g).value; }
Score pass_allowed_right_score(const Game& g) { return pass_allowed_right(g).value; }

}  // namespace scoringcg
