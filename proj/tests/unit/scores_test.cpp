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

#include <gtest/gtest.h>

#include <random>

#include "builders.hpp"
#include "oracles.hpp"
#include "scoringcg/normal_play.hpp"
#include "scoringcg/universes.hpp"

namespace scoringcg {
namespace {

using build::atom;
using build::g;
using build::num;
using build::opts;

std::vector<Game> corpus(UniversePredicate p) {
  UniverseFilter f;
  f.predicate = p;
  f.max_day = 2;
  f.max_options = 1;
  return enumerate(f);
}

TEST(Scores, WorkedSumExample) {
  Game x = g(atom(1), 2) + g(2, -1);
  EXPECT_EQ(left_score(x), Score(4));
  EXPECT_EQ(right_score(x), Score(0));
}

TEST(Scores, AtomCases) {
  Game hot = g(atom(3), -2);
  EXPECT_EQ(left_score(hot), Score(3));
  EXPECT_EQ(right_score(hot), Score(-2));
  EXPECT_EQ(scores(num(Score(7, 2))), (ScorePair{Score(7, 2), Score(7, 2)}));
}

TEST(Scores, WaitingMoveForcesRight) {
  Game x = hat(2) + g(num(-4), opts({g(-3, 5)}));
  EXPECT_EQ(left_score(x), Score(5));
}

TEST(Scores, ConjugateIsNotAnInverse) {
  Game x = g(g(1, -1), g(1, 1));
  EXPECT_EQ(left_score(x + ~x), Score(-2));
}

TEST(Scores, StableExampleRightScore) {
  // <^2 | <<-5|5> | -5>>
  Game x = g(atom(2), opts({g(g(-5, 5), -5)}));
  EXPECT_EQ(left_score(x), Score(2));
  EXPECT_EQ(right_score(x), Score(5));
}

TEST(Scores, BestOptions) {
  Game x = g(opts({num(1), num(3), num(2)}), opts({num(0), num(-1)}));
  EXPECT_EQ(*best_left_option(x), num(3));
  EXPECT_EQ(*best_right_option(x), num(-1));
  EXPECT_FALSE(best_left_option(g(atom(0), 1)).has_value());
}

TEST(Scores, MatchesUnmemoizedMinimaxOnRandomCorpusGamesAndSums) {
  std::vector<Game> pool = corpus(UniversePredicate::kAll);
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const Game& a = pool[pick(rng)];
    ASSERT_EQ(left_score(a), oracle::ls({a}));
    ASSERT_EQ(right_score(a), oracle::rs({a}));
    if (i % 4 == 0) {
      const Game& b = pool[pick(rng)];
      ASSERT_EQ(left_score(a + b), oracle::ls({a, b}));
      ASSERT_EQ(right_score(a + b), oracle::rs({a, b}));
    }
  }
}

TEST(Scores, ConjugationSymmetry) {
  for (const Game& a : corpus(UniversePredicate::kAll)) {
    ASSERT_EQ(left_score(~a), -right_score(a));
    ASSERT_EQ(right_score(~a), -left_score(a));
    ASSERT_EQ(pass_allowed_right_score(a), -pass_allowed_left_score(~a));
  }
}

TEST(PassAllowed, SmallExamples) {
  EXPECT_EQ(pass_allowed_left_score(num(0)), Score(0));
  EXPECT_EQ(pass_allowed_right_score(num(0)), Score(0));
  EXPECT_EQ(pass_allowed_left_score(g(-1, 1)), Score(-1));
  EXPECT_EQ(pass_allowed_right_score(g(-1, 1)), Score(1));
  EXPECT_EQ(pass_allowed_left(g(-1, 1)).waiting_moves, 0u);
  // Oracle: full minimax with explicit waiting chains, n = 0..2.
  EXPECT_EQ(oracle::pass_left({g(-1, 1)}, 2), Score(-1));
  EXPECT_EQ(oracle::pass_right({g(-1, 1)}, 2), Score(1));
}

TEST(PassAllowed, AgreesWithOracleAndBoundsPlainScores) {
  for (const Game& a : corpus(UniversePredicate::kAll)) {
    Score pl = pass_allowed_left_score(a);
    Score pr = pass_allowed_right_score(a);
    ASSERT_LE(pl, left_score(a));
    ASSERT_GE(pr, right_score(a));
    if (a.id() % 13 == 0) {
      int bound = static_cast<int>(max_play_length(a)) + 2;
      ASSERT_EQ(pl, oracle::pass_left({a}, bound));
      ASSERT_EQ(pr, oracle::pass_right({a}, bound));
    }
  }
}

TEST(PassAllowed, StabilizesAtMaxPlayLength) {
  for (const Game& a : corpus(UniversePredicate::kAll)) {
    int m = static_cast<int>(max_play_length(a));
    Score at = left_score(a + hat(-m));
    for (int n = m + 1; n <= m + 3; ++n) ASSERT_EQ(left_score(a + hat(-n)), at);
  }
}

TEST(PassAllowed, NonIncreasingOnGuaranteedGames) {
  for (const Game& a : corpus(UniversePredicate::kGuaranteed)) {
    int m = static_cast<int>(max_play_length(a));
    Score prev = left_score(a);
    for (int n = 1; n <= m + 3; ++n) {
      Score cur = left_score(a + hat(-n));
      ASSERT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(PassAllowed, MoreWaitingMovesCanHelpLeftOutsideGuaranteedGames) {
  // A hot atomic game reached only after Right's forced move: one extra
  // waiting move for Right hands Left the move in <^5|^-5>.
  Game x = g(opts({g(atom(5), atom(-5))}), atom(0));
  EXPECT_FALSE(is_guaranteed(x));
  EXPECT_EQ(left_score(x), Score(-5));
  EXPECT_EQ(left_score(x + hat(-1)), Score(5));
  EXPECT_EQ(oracle::ls({x, oracle::waiting(-1)}), Score(5));
}

TEST(PassAllowed, SuperadditiveOnGuaranteedPairs) {
  std::vector<Game> pool = corpus(UniversePredicate::kGuaranteed);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Game& a = pool[pick(rng)];
    const Game& b = pool[pick(rng)];
    ASSERT_GE(pass_allowed_right_score(a + b),
              pass_allowed_right_score(a) + pass_allowed_right_score(b));
    ASSERT_LE(pass_allowed_left_score(a + b),
              pass_allowed_left_score(a) + pass_allowed_left_score(b));
  }
}

TEST(PassAllowed, SuperadditivityCounterexampleInFullUniverse) {
  // <<<^-1|^1>|-1> | <-1|<^1|^-1>>>  and  <^1 | <<^-1|^0>|^0>>
  Game a = g(g(g(atom(-1), atom(1)), -1), g(num(-1), g(atom(1), atom(-1))));
  Game b = g(atom(1), opts({g(opts({g(atom(-1), atom(0))}), atom(0))}));
  Score lhs = pass_allowed_right_score(a + b);
  Score rhs = pass_allowed_right_score(a) + pass_allowed_right_score(b);
  EXPECT_LT(lhs, rhs);
  int bound = static_cast<int>(max_play_length(a + b)) + 1;
  EXPECT_EQ(lhs, oracle::pass_right({a, b}, bound));
  EXPECT_EQ(pass_allowed_right_score(a), oracle::pass_right({a}, bound));
  EXPECT_EQ(pass_allowed_right_score(b), oracle::pass_right({b}, bound));
}

}  // namespace
}  // namespace scoringcg
