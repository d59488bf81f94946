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

#ifndef SCORINGCG_NOTATION_HPP_
#define SCORINGCG_NOTATION_HPP_

#include <string>
#include <string_view>

#include "scoringcg/game.hpp"
#include "scoringcg/normal_play.hpp"

namespace scoringcg {

// Scoring games, whitespace-insensitive:
//
//   expr     := unary (('+' | '-') unary)*        a - b means a + ~b
//   unary    := ('~' | '-') unary | primary        '-' before a digit is a sign
//   primary  := rational | '<' side '|' side '>' | 'hat(' integer ')' | '(' expr ')'
//   side     := '^' rational | expr (',' expr)*
//   rational := '-'? digits ('/' digits)?          r means <^r|^r>
//
// Throws ParseError with the byte offset of the first offending character.
Game parse_scoring(std::string_view text);

// Inverse of parse_scoring on structure: numbers print as their score, other
// games as <...|...> with atoms written ^s.
std::string format_scoring(const Game& g);

// Normal-play games:
//
//   expr    := unary (('+' | '-') unary)*
//   unary   := '-' unary | primary
//   primary := '{' list? '|' list? '}' | '*' | integer | '(' expr ')'
//   list    := expr (',' expr)*
//
// '*' is {0|0}; an integer n is the canonical {n-1|} (or its negative).
NpGame parse_np(std::string_view text);
std::string format_np(const NpGame& g);

}  // namespace scoringcg

#endif  // SCORINGCG_NOTATION_HPP_
