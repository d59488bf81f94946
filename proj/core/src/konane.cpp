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

#include "scoringcg/konane.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "scoringcg/errors.hpp"

namespace scoringcg::konane {

Player opponent(Player p) { return p == Player::kBlack ? Player::kWhite : Player::kBlack; }

Cell stone_of(Player p) { return p == Player::kBlack ? Cell::kBlack : Cell::kWhite; }

std::string_view player_name(Player p) { return p == Player::kBlack ? "black" : "white"; }

std::optional<Player> parse_player(std::string_view text) {
  if (text == "black" || text == "x" || text == "left") return Player::kBlack;
  if (text == "white" || text == "o" || text == "right") return Player::kWhite;
  return std::nullopt;
}

std::string_view ruleset_name(Ruleset r) {
  switch (r) {
    case Ruleset::kKonaneNormal:
      return "konane_normal";
    case Ruleset::kScoringKonane:
      return "scoring_konane";
    case Ruleset::kDiskonnect:
      return "diskonnect";
  }
  return "?";
}

std::optional<Ruleset> parse_ruleset(std::string_view text) {
  for (Ruleset r : {Ruleset::kKonaneNormal, Ruleset::kScoringKonane, Ruleset::kDiskonnect}) {
    if (text == ruleset_name(r)) return r;
  }
  return std::nullopt;
}

namespace {

char cell_char(Cell c) {
  switch (c) {
    case Cell::kBlack:
      return 'x';
    case Cell::kWhite:
      return 'o';
    case Cell::kEmpty:
      break;
  }
  return '.';
}

}  // namespace

Board::Board(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw std::invalid_argument("negative board dimension");
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), '.');
}

Board Board::parse(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      std::size_t last = line.find_last_not_of(" \t\r");
      std::string_view row = line.substr(first, last - first + 1);
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != 'x' && row[i] != 'o' && row[i] != '.') {
          throw ParseError(std::string("unexpected board character '") + row[i] + "'",
                           pos + first + i);
        }
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("ragged board row", pos + first);
      }
      rows.emplace_back(row);
    }
    pos = end + 1;
  }
  if (rows.empty()) throw ParseError("empty board", 0);
  Board b(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
  std::string cells;
  for (const std::string& row : rows) cells += row;
  b.cells_ = std::move(cells);
  return b;
}

std::string Board::to_text() const {
  std::string out;
  for (int r = 0; r < height_; ++r) {
    out.append(cells_, static_cast<std::size_t>(r * width_), static_cast<std::size_t>(width_));
    out += '\n';
  }
  return out;
}

bool Board::contains(int row, int col) const {
  return row >= 0 && col >= 0 && row < height_ && col < width_;
}

Cell Board::at(int row, int col) const {
  switch (cells_[static_cast<std::size_t>(row * width_ + col)]) {
    case 'x':
      return Cell::kBlack;
    case 'o':
      return Cell::kWhite;
    default:
      return Cell::kEmpty;
  }
}

void Board::set(int row, int col, Cell c) {
  cells_[static_cast<std::size_t>(row * width_ + col)] = cell_char(c);
}

Board Board::color_swapped() const {
  Board out = *this;
  for (char& c : out.cells_) {
    if (c == 'x') {
      c = 'o';
    } else if (c == 'o') {
      c = 'x';
    }
  }
  std::swap(out.captured_black, out.captured_white);
  return out;
}

std::vector<Square> Board::stones(Player p) const {
  std::vector<Square> out;
  Cell want = stone_of(p);
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (at(r, c) == want) out.push_back({r, c});
    }
  }
  return out;
}

std::vector<std::pair<Move, Board>> legal_moves(const Board& b, Player player) {
  static constexpr int kDirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  std::vector<std::pair<Move, Board>> out;
  Cell mine = stone_of(player);
  Cell theirs = stone_of(opponent(player));
  for (const Square& from : b.stones(player)) {
    for (const auto& d : kDirs) {
      Board cur = b;
      Move move{from, from, {}};
      cur.set(from.row, from.col, Cell::kEmpty);
      Square at = from;
      while (true) {
        int mr = at.row + d[0], mc = at.col + d[1];
        int lr = at.row + 2 * d[0], lc = at.col + 2 * d[1];
        if (!cur.contains(lr, lc) || cur.at(mr, mc) != theirs || cur.at(lr, lc) != Cell::kEmpty) {
          break;
        }
        cur.set(mr, mc, Cell::kEmpty);
        move.captured.push_back({mr, mc});
        at = {lr, lc};
        move.to = at;
        if (player == Player::kBlack) {
          ++cur.captured_black;
        } else {
          ++cur.captured_white;
        }
        Board result = cur;
        result.set(at.row, at.col, mine);
        out.emplace_back(move, std::move(result));
      }
    }
  }
  return out;
}

std::vector<Square> insecure_stones(const Board& b, Player owner) {
  Player attacker = opponent(owner);
  std::set<Square> captured;
  std::unordered_set<std::string> seen{b.grid()};
  std::vector<Board> frontier{b};
  while (!frontier.empty()) {
    Board cur = std::move(frontier.back());
    frontier.pop_back();
    for (auto& [move, next] : legal_moves(cur, attacker)) {
      captured.insert(move.captured.begin(), move.captured.end());
      if (seen.insert(next.grid()).second) frontier.push_back(std::move(next));
    }
  }
  return {captured.begin(), captured.end()};
}

namespace {

void check_cells(const Board& b, const ExpansionLimits& limits) {
  std::size_t cells = static_cast<std::size_t>(b.width()) * static_cast<std::size_t>(b.height());
  if (cells > limits.max_cells) throw ResourceError("konane.max_cells", limits.max_cells);
}

// Capture-free value of a grid; each memo entry keyed by the grid only.
class Expander {
 public:
  Expander(Ruleset rules, const ExpansionLimits& limits) : rules_(rules), limits_(limits) {}

  Game expand(const Board& b) {
    auto it = memo_.find(b.grid());
    if (it != memo_.end()) return it->second;
    if (++started_ > limits_.max_positions) {
      throw ResourceError("konane.max_positions", limits_.max_positions);
    }
    Board base = b;
    base.captured_black = base.captured_white = 0;
    Side left = side_for(base, Player::kBlack);
    Side right = side_for(base, Player::kWhite);
    Game g = Game::make(std::move(left), std::move(right));
    memo_.emplace(b.grid(), g);
    return g;
  }

 private:
  Side side_for(const Board& b, Player p) {
    auto moves = legal_moves(b, p);
    if (moves.empty()) {
      Score atom = 0;
      if (rules_ == Ruleset::kDiskonnect) {
        auto lost = static_cast<Score::Int>(insecure_stones(b, p).size());
        atom = p == Player::kBlack ? Score(-lost) : Score(lost);
      }
      return Side::atom(atom);
    }
    std::vector<Game> options;
    options.reserve(moves.size());
    for (auto& [move, next] : moves) {
      Score delta = next.captured_black - next.captured_white;
      options.push_back(Game::number(delta) + expand(next));
    }
    return Side::of(std::move(options));
  }

  Ruleset rules_;
  ExpansionLimits limits_;
  std::unordered_map<std::string, Game> memo_;
  std::size_t started_ = 0;  // positions whose expansion began
};

}  // namespace

Game to_game(const Board& b, Ruleset rules, const ExpansionLimits& limits) {
  if (rules == Ruleset::kKonaneNormal) {
    throw PreconditionError("to_game needs a scoring ruleset; use to_np for konane_normal");
  }
  check_cells(b, limits);
  Expander expander(rules, limits);
  Game g = expander.expand(b);
  Score shift = b.captured_black - b.captured_white;
  return shift == 0 ? g : Game::number(shift) + g;
}

namespace {

class NpExpander {
 public:
  explicit NpExpander(const ExpansionLimits& limits) : limits_(limits) {}

  NpGame expand(const Board& b) {
    auto it = memo_.find(b.grid());
    if (it != memo_.end()) return it->second;
    if (++started_ > limits_.max_positions) {
      throw ResourceError("konane.max_positions", limits_.max_positions);
    }
    std::vector<NpGame> left, right;
    for (auto& [move, next] : legal_moves(b, Player::kBlack)) left.push_back(expand(next));
    for (auto& [move, next] : legal_moves(b, Player::kWhite)) right.push_back(expand(next));
    NpGame g = NpGame::make(std::move(left), std::move(right));
    memo_.emplace(b.grid(), g);
    return g;
  }

 private:
  ExpansionLimits limits_;
  std::unordered_map<std::string, NpGame> memo_;
  std::size_t started_ = 0;
};

}  // namespace

NpGame to_np(const Board& b, const ExpansionLimits& limits) {
  check_cells(b, limits);
  NpExpander expander(limits);
  return expander.expand(b);
}

OfferEvaluation offer_eval(const Board& b, Ruleset rules, Player beneficiary,
                           const ExpansionLimits& limits) {
  Game g = to_game(b, rules, limits);
  Game pass = hat(beneficiary == Player::kBlack ? 1 : -1);
  return {scores(g), scores(g + pass)};
}

OfferVerdict offer_verdict(const OfferEvaluation& e, Player beneficiary) {
  if (beneficiary == Player::kBlack) {
    return {e.decline.ls, e.accept.ls, e.accept.ls > e.decline.ls};
  }
  return {e.decline.rs, e.accept.rs, e.accept.rs < e.decline.rs};
}

}  // namespace scoringcg::konane
