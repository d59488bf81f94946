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

#ifndef SCORINGCG_COMPARISON_HPP_
#define SCORINGCG_COMPARISON_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scoringcg/game.hpp"
#include "scoringcg/normal_play.hpp"
#include "scoringcg/score.hpp"
#include "scoringcg/universes.hpp"

namespace scoringcg {

enum class ScoreKind { kLeft, kRight };

std::string_view score_kind_name(ScoreKind kind);

// A distinguishing game x refuting g >= h: the chosen score of g + x is
// strictly below the same score of h + x.
struct Witness {
  Game x;
  ScoreKind kind;
  Score lhs_value;  // score of g + x
  Score rhs_value;  // score of h + x
};

// Recomputes both sums and checks the claimed strict inequality.
bool verify_witness(const Game& g, const Game& h, const Witness& w);

// Pass-allowed Left-score at least l, and every Right option admits a Left
// reply that is again left-l-protected. A Right option with an atomic Left
// side offers no reply, so its presence makes g unprotected.
bool left_protected(const Game& g, const Score& l);
// The conjugate notion: left_protected(~g, -r). It holds iff the pass-allowed
// Right-score is at most r and every Left option admits a protected Right
// reply.
bool right_protected(const Game& g, const Score& r);

// g >= l, g <= r and g == 0 over the guaranteed universe, decided by the
// protection recursion. All three throw PreconditionError unless g is
// guaranteed.
bool ge_number(const Game& g, const Score& l);
bool le_number(const Game& g, const Score& r);
bool eq_number(const Game& g, const Score& s);
bool eq_zero(const Game& g);

// The dicot analogue using plain Ls/Rs, for Ettinger's universe: dicots
// whose doubly atomic followers are numbers. Throws PreconditionError
// otherwise.
bool ettinger_left_safe(const Game& g, const Score& r);
bool ettinger_right_safe(const Game& g, const Score& r);

// ~zeta(h) + <-1 | 1>, which separates zeta(g) from zeta(h) whenever g >= h
// fails in Normal play.
Game np_witness(const NpGame& h);

// For guaranteed g that is not left-l-protected, builds a game of the shape
// <^a | b + hat(-n)> with Rs(g + x) < 0 < Rs(l + x), and returns it as a
// Right-score witness against g >= l. Empty when g is protected. Throws
// PreconditionError for non-guaranteed g.
std::optional<Witness> protection_witness(const Game& g, const Score& l);

// For a Left-atomic g = <^l | ...> with l > Rs(g): x = g - k, k the midpoint
// of (Rs(g), l). Ls(0 + x) > 0 > Ls(hat(1) + x), returned as a Left-score
// witness against hat(1) >= 0. Throws PreconditionError otherwise.
Witness stability_witness(const Game& g);

// The games always tried by falsify_ge in addition to its pool.
std::vector<Game> special_distinguishers(const Game& g, const Game& h);

// Outcome of a bounded search for a counterexample. An empty witness only
// means no refutation was found among the examined games; it is not a proof
// that g >= h.
struct FalsificationResult {
  std::optional<Witness> witness;
  std::size_t examined = 0;

  bool refuted() const { return witness.has_value(); }
};

// Scans enumerate(pool), then `extra`, then special_distinguishers(g, h), and
// returns the first x with Ls(g+x) < Ls(h+x) or Rs(g+x) < Rs(h+x).
FalsificationResult falsify_ge(const Game& g, const Game& h, const UniverseFilter& pool,
                               std::span<const Game> extra = {});
// Same scan over an explicit candidate list (plus the specials).
FalsificationResult falsify_ge_over(const Game& g, const Game& h,
                                    std::span<const Game> candidates);

}  // namespace scoringcg

#endif  // SCORINGCG_COMPARISON_HPP_
