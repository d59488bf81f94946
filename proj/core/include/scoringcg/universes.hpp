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

#ifndef SCORINGCG_UNIVERSES_HPP_
#define SCORINGCG_UNIVERSES_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "scoringcg/game.hpp"
#include "scoringcg/score.hpp"

namespace scoringcg {

bool is_left_atomic(const Game& g);
bool is_right_atomic(const Game& g);
bool is_atomic(const Game& g);

// Every atomic follower F has Ls(F) <= Rs(F).
bool is_stable(const Game& g);

// Every atomic follower F satisfies s <= t for each atom score s found among
// the followers of F's Left side and each t among the followers of its Right
// side. An atom side contributes exactly its own score.
bool is_guaranteed(const Game& g);

// Every follower lets both players move, or neither (both sides atoms,
// possibly with different scores).
bool is_dicot(const Game& g);

// Every follower with two atom sides has equal scores on them.
bool is_stewart(const Game& g);

enum class UniversePredicate { kAll, kGuaranteed, kStable, kDicot, kStewart };

bool satisfies(const Game& g, UniversePredicate predicate);
std::string_view predicate_name(UniversePredicate predicate);
std::optional<UniversePredicate> parse_predicate(std::string_view name);

struct UniverseFilter {
  UniversePredicate predicate = UniversePredicate::kAll;
  // Atom scores available to the generator.
  std::vector<Score> score_set{Score(-1), Score(0), Score(1)};
  unsigned max_day = 1;
  // Largest option set generated on either side; 0 means unbounded.
  unsigned max_options = 0;
  unsigned day_ceiling = 2;
  // Bound on candidate games per generation day and on the emitted pool.
  std::size_t max_pool = 2'000'000;
};

// Every game born by filter.max_day whose atoms come from the score set and
// which passes the predicate, deduplicated, in deterministic order (by day
// of first generation, then generation order). Throws PreconditionError when
// max_day exceeds the ceiling or the score set is empty, and ResourceError
// when a bound would be exceeded.
std::vector<Game> enumerate(const UniverseFilter& filter);

}  // namespace scoringcg

#endif  // SCORINGCG_UNIVERSES_HPP_
