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

#ifndef SCORINGCG_KONANE_HPP_
#define SCORINGCG_KONANE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scoringcg/game.hpp"
#include "scoringcg/normal_play.hpp"
#include "scoringcg/scores.hpp"

namespace scoringcg::konane {

enum class Cell : std::uint8_t { kEmpty, kBlack, kWhite };

// Black is Left, White is Right.
enum class Player { kBlack, kWhite };

Player opponent(Player p);
Cell stone_of(Player p);
std::string_view player_name(Player p);
std::optional<Player> parse_player(std::string_view text);

enum class Ruleset { kKonaneNormal, kScoringKonane, kDiskonnect };

std::string_view ruleset_name(Ruleset r);
std::optional<Ruleset> parse_ruleset(std::string_view text);

struct Square {
  int row;
  int col;
  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

// Rectangular position. Row 0 is the top row. captured_black counts stones
// removed by Black, captured_white stones removed by White.
class Board {
 public:
  Board(int width, int height);

  // Rows top to bottom, one per line: 'x' Black, 'o' White, '.' empty.
  // Blank lines and surrounding whitespace are ignored.
  static Board parse(std::string_view text);
  std::string to_text() const;

  int width() const { return width_; }
  int height() const { return height_; }
  bool contains(int row, int col) const;
  Cell at(int row, int col) const;
  void set(int row, int col, Cell c);

  int captured_black = 0;
  int captured_white = 0;

  // Colors and capture counts swapped.
  Board color_swapped() const;
  // Grid contents only, independent of capture counts.
  const std::string& grid() const { return cells_; }
  std::vector<Square> stones(Player p) const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  int width_;
  int height_;
  std::string cells_;  // row-major, one char per cell
};

struct Move {
  Square from;
  Square to;
  std::vector<Square> captured;
};

// Every single and multi-jump for `player`. A multi-jump keeps one line and
// one direction; each prefix is listed as its own move.
std::vector<std::pair<Move, Board>> legal_moves(const Board& b, Player player);

// Stones of `owner` that the opponent could capture by moving alone, one
// move after another. Sorted.
std::vector<Square> insecure_stones(const Board& b, Player owner);

struct ExpansionLimits {
  std::size_t max_cells = 64;
  std::size_t max_positions = 2'000'000;
};

// Scoring-game value of the position (scoring_konane or diskonnect). Atoms
// are net captures, Black minus White; under diskonnect a stuck player's
// insecure stones are credited to the opponent. Throws PreconditionError
// for konane_normal and ResourceError when a limit is exceeded.
Game to_game(const Board& b, Ruleset rules, const ExpansionLimits& limits = {});

// Normal-play value under ordinary konane rules.
NpGame to_np(const Board& b, const ExpansionLimits& limits = {});

// The Lawyer's offer: a single pass that the beneficiary must spend at some
// point is the waiting move hat(1) for Black, hat(-1) for White.
struct OfferEvaluation {
  ScorePair decline;
  ScorePair accept;
};

OfferEvaluation offer_eval(const Board& b, Ruleset rules, Player beneficiary,
                           const ExpansionLimits& limits = {});

// The score the beneficiary gets moving first, with and without the pass,
// and whether taking the pass strictly helps.
struct OfferVerdict {
  Score decline;
  Score accept;
  bool accept_is_better;
};

OfferVerdict offer_verdict(const OfferEvaluation& e, Player beneficiary);

}  // namespace scoringcg::konane

#endif  // SCORINGCG_KONANE_HPP_
