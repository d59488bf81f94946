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

#ifndef SCORINGCG_SCORES_HPP_
#define SCORINGCG_SCORES_HPP_

#include <optional>

#include "scoringcg/game.hpp"
#include "scoringcg/score.hpp"

namespace scoringcg {

struct ScorePair {
  Score ls;
  Score rs;
  friend bool operator==(const ScorePair&, const ScorePair&) = default;
};

// Optimal alternating-play score with Left (resp. Right) moving first.
Score left_score(const Game& g);
Score right_score(const Game& g);
ScorePair scores(const Game& g);

// The option realizing left_score / right_score; ties resolve to the
// structurally smallest option. Empty when that side is an atom.
std::optional<Game> best_left_option(const Game& g);
std::optional<Game> best_right_option(const Game& g);

// Left-score when Right additionally holds waiting moves: the minimum of
// Ls(g + hat(-n)) over n >= 0. The search stops at n = max_play_length(g);
// beyond that Right's stock can no longer run out before the game ends, so
// the sequence is constant.
struct PassAllowedScore {
  Score value;
  // Smallest n realizing the extremum.
  unsigned waiting_moves;
};

PassAllowedScore pass_allowed_left(const Game& g);
PassAllowedScore pass_allowed_right(const Game& g);
Score pass_allowed_left_score(const Game& g);
Score pass_allowed_right_score(const Game& g);

}  // namespace scoringcg

#endif  // SCORINGCG_SCORES_HPP_
