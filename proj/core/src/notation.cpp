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

#include "scoringcg/notation.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "scoringcg/errors.hpp"

namespace scoringcg {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Character right after the next one, ignoring whitespace in between.
  char peek_second() {
    skip_ws();
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw ParseError(what + " (end of input)", pos_);
    throw ParseError(what + ", found '" + text_[pos_] + "'", pos_);
  }

  Score rational() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '-') ++p;
    auto digits = [&] {
      std::size_t d = p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      return p > d;
    };
    if (!digits()) fail("expected a rational");
    if (p < text_.size() && text_[p] == '/') {
      ++p;
      if (!digits()) {
        pos_ = p;
        fail("expected a denominator");
      }
    }
    try {
      Score s = Score::parse(text_.substr(start, p - start));
      pos_ = p;
      return s;
    } catch (const ParseError& e) {
      throw ParseError(std::string("invalid rational: ") + e.what(), start);
    }
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", start);
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ScoringParser {
 public:
  explicit ScoringParser(std::string_view text) : in_(text) {}

  Game parse() {
    Game g = expr();
    in_.expect_end();
    return g;
  }

 private:
  Game expr() {
    Game g = unary();
    while (true) {
      if (in_.accept('+')) {
        g = g + unary();
      } else if (in_.peek() == '-') {
        in_.accept('-');
        g = g + conjugate(unary());
      } else {
        return g;
      }
    }
  }

  Game unary() {
    if (in_.accept('~')) return conjugate(unary());
    if (in_.peek() == '-' && !std::isdigit(static_cast<unsigned char>(in_.peek_second()))) {
      in_.accept('-');
      return conjugate(unary());
    }
    return primary();
  }

  Game primary() {
    char c = in_.peek();
    if (c == '<') {
      in_.accept('<');
      Side left = side();
      in_.expect('|');
      Side right = side();
      in_.expect('>');
      return Game::make(std::move(left), std::move(right));
    }
    if (c == '(') {
      in_.accept('(');
      Game g = expr();
      in_.expect(')');
      return g;
    }
    if (in_.accept_word("hat")) {
      in_.expect('(');
      int n = in_.integer();
      in_.expect(')');
      return hat(n);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return Game::number(in_.rational());
    in_.fail("expected a game");
  }

  Side side() {
    if (in_.accept('^')) return Side::atom(in_.rational());
    std::vector<Game> options{expr()};
    while (in_.accept(',')) options.push_back(expr());
    return Side::of(std::move(options));
  }

  Cursor in_;
};

class NpParser {
 public:
  explicit NpParser(std::string_view text) : in_(text) {}

  NpGame parse() {
    NpGame g = expr();
    in_.expect_end();
    return g;
  }

 private:
  NpGame expr() {
    NpGame g = unary();
    while (true) {
      if (in_.accept('+')) {
        g = np_sum(g, unary());
      } else if (in_.accept('-')) {
        g = np_sum(g, np_negate(unary()));
      } else {
        return g;
      }
    }
  }

  NpGame unary() {
    if (in_.peek() == '-' && !std::isdigit(static_cast<unsigned char>(in_.peek_second()))) {
      in_.accept('-');
      return np_negate(unary());
    }
    return primary();
  }

  NpGame primary() {
    char c = in_.peek();
    if (c == '{') {
      in_.accept('{');
      std::vector<NpGame> left = list('|');
      in_.expect('|');
      std::vector<NpGame> right = list('}');
      in_.expect('}');
      return NpGame::make(std::move(left), std::move(right));
    }
    if (c == '*') {
      in_.accept('*');
      return np_star();
    }
    if (c == '(') {
      in_.accept('(');
      NpGame g = expr();
      in_.expect(')');
      return g;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return np_integer(in_.integer());
    in_.fail("expected a Normal-play game");
  }

  std::vector<NpGame> list(char terminator) {
    std::vector<NpGame> out;
    if (in_.peek() == terminator) return out;
    out.push_back(expr());
    while (in_.accept(',')) out.push_back(expr());
    return out;
  }

  Cursor in_;
};

void format_side(const Side& s, std::string& out);

void format_into(const Game& g, std::string& out) {
  if (g.is_number()) {
    out += g.left().score().to_string();
    return;
  }
  out += '<';
  format_side(g.left(), out);
  out += '|';
  format_side(g.right(), out);
  out += '>';
}

void format_side(const Side& s, std::string& out) {
  if (s.is_atom()) {
    out += '^';
    out += s.score().to_string();
    return;
  }
  bool first = true;
  for (const Game& o : s.options()) {
    if (!first) out += ',';
    first = false;
    format_into(o, out);
  }
}

std::optional<int> as_integer(const NpGame& g) {
  if (!g.left().empty() && !g.right().empty()) return std::nullopt;
  int bound = static_cast<int>(g.birthday());
  int n = g.right().empty() ? bound : -bound;
  if (np_integer(n) == g) return n;
  return std::nullopt;
}

void format_np_into(const NpGame& g, std::string& out) {
  if (auto n = as_integer(g)) {
    out += std::to_string(*n);
    return;
  }
  if (g == np_star()) {
    out += '*';
    return;
  }
  auto list = [&](std::span<const NpGame> xs) {
    bool first = true;
    for (const NpGame& x : xs) {
      if (!first) out += ',';
      first = false;
      format_np_into(x, out);
    }
  };
  out += '{';
  list(g.left());
  out += '|';
  list(g.right());
  out += '}';
}

}  // namespace

Game parse_scoring(std::string_view text) { return ScoringParser(text).parse(); }

std::string format_scoring(const Game& g) {
  std::string out;
  format_into(g, out);
  return out;
}

NpGame parse_np(std::string_view text) { return NpParser(text).parse(); }

std::string format_np(const NpGame& g) {
  std::string out;
  format_np_into(g, out);
  return out;
}

}  // namespace scoringcg
