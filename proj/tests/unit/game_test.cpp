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

#include "scoringcg/game.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "builders.hpp"
#include "scoringcg/universes.hpp"

namespace scoringcg {
namespace {

using build::atom;
using build::g;
using build::num;
using build::opts;

std::vector<Game> small_corpus() {
  UniverseFilter f;
  f.max_day = 2;
  f.max_options = 1;
  return enumerate(f);
}

TEST(Game, HashConsingGivesStructuralEquality) {
  Game a = g(atom(3), opts({g(2, 1)}));
  Game b = g(atom(3), opts({g(2, 1)}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.id(), b.id());
  EXPECT_NE(a, g(atom(3), opts({g(1, 2)})));
}

TEST(Game, OptionSetsAreSortedAndDeduplicated) {
  Game x = g(opts({num(1), num(-1), num(1)}), atom(0));
  Game y = g(opts({num(-1), num(1)}), atom(0));
  EXPECT_EQ(x, y);
  ASSERT_EQ(x.left().options().size(), 2u);
  EXPECT_LT(compare(x.left().options()[0], x.left().options()[1]), 0);
}

TEST(Game, EmptyOptionListIsRejected) {
  EXPECT_THROW(Side::of({}), std::invalid_argument);
}

TEST(Game, NumbersAreDoubleAtoms) {
  Game n = num(Score(-1, 2));
  EXPECT_TRUE(n.is_number());
  EXPECT_TRUE(n.left().is_atom());
  EXPECT_EQ(n.right().score(), Score(-1, 2));
  EXPECT_EQ(n.birthday(), 0u);
  EXPECT_FALSE(g(atom(0), atom(1)).is_number());
}

TEST(Game, Birthdays) {
  EXPECT_EQ(g(atom(3), opts({g(2, 1)})).birthday(), 2u);
  EXPECT_EQ(g(2, 1).birthday(), 1u);
  EXPECT_EQ(birthday(g(atom(0), atom(5))), 0u);
}

TEST(Game, FigureTwoSum) {
  // <^3 | <2|1>> + <-3 | ^0>
  Game lhs = g(atom(3), opts({g(2, 1)}));
  Game rhs = g(num(-3), atom(0));
  Game expected = g(opts({g(atom(0), opts({g(-1, -2)}))}),
                    opts({g(opts({g(-1, -2), g(num(-1), atom(2))}), opts({g(num(-2), atom(1))}))}));
  auto start = std::chrono::steady_clock::now();
  Game s = lhs + rhs;
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(s, expected);
  EXPECT_EQ(s.birthday(), 3u);
  EXPECT_LT(elapsed, std::chrono::milliseconds(1));
}

TEST(Game, AtomsMergeOnlyWhenBothSidesAtomic) {
  Game a = g(atom(1), opts({num(2)}));
  Game b = g(opts({num(2)}), atom(-1));
  Game s = a + b;
  // Left can move only in b; Right only in a.
  ASSERT_FALSE(s.left().is_atom());
  ASSERT_FALSE(s.right().is_atom());
  EXPECT_EQ(s.left().options()[0], a + num(2));
  EXPECT_EQ(s.right().options()[0], num(2) + b);
  EXPECT_EQ(g(atom(1), atom(2)) + g(atom(3), atom(-5)), g(atom(4), atom(-3)));
}

TEST(Game, SumOfNumbersIsNumber) {
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) {
      EXPECT_EQ(num(Score(p, 2)) + num(q), num(Score(p, 2) + Score(q)));
    }
  }
}

TEST(Game, SumIsCommutativeAssociativeWithZeroIdentity) {
  std::vector<Game> corpus = small_corpus();
  const std::size_t step = 97;
  for (std::size_t i = 0; i < corpus.size(); i += step) {
    const Game& a = corpus[i];
    EXPECT_EQ(a + num(0), a);
    for (std::size_t j = 5; j < corpus.size(); j += 3 * step) {
      const Game& b = corpus[j];
      EXPECT_EQ(a + b, b + a);
      const Game& c = corpus[(i + j) % corpus.size()];
      EXPECT_EQ((a + b) + c, a + (b + c));
    }
  }
}

TEST(Game, SpanSum) {
  std::vector<Game> parts{num(1), g(0, 0), g(atom(2), opts({num(-1)}))};
  EXPECT_EQ(sum(parts), parts[0] + parts[1] + parts[2]);
  EXPECT_EQ(sum(std::span<const Game>{}), num(0));
}

TEST(Game, ConjugateSwapsAndNegates) {
  Game x = g(atom(3), opts({g(2, 1)}));
  EXPECT_EQ(conjugate(x), g(opts({g(-1, -2)}), atom(-3)));
  EXPECT_EQ(~num(Score(5, 3)), num(Score(-5, 3)));
  for (const Game& a : small_corpus()) {
    ASSERT_EQ(conjugate(conjugate(a)), a);
    ASSERT_EQ(conjugate(a).birthday(), a.birthday());
  }
}

TEST(Game, ConjugateDistributesOverSum) {
  std::vector<Game> corpus = small_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 211) {
    for (std::size_t j = 3; j < corpus.size(); j += 307) {
      EXPECT_EQ(~(corpus[i] + corpus[j]), ~corpus[i] + ~corpus[j]);
    }
  }
}

TEST(Game, FollowersAreClosedAndBirthdaysDecrease) {
  Game x = g(atom(3), opts({g(2, 1)})) + g(num(-3), atom(0));
  std::vector<Game> fs = followers(x);
  EXPECT_EQ(fs.front(), x);
  auto contains = [&](const Game& y) { return std::find(fs.begin(), fs.end(), y) != fs.end(); };
  for (const Game& f : fs) {
    for (const Side* side : {&f.left(), &f.right()}) {
      for (const Game& o : side->options()) {
        EXPECT_TRUE(contains(o));
        EXPECT_LT(o.birthday(), f.birthday());
      }
    }
  }
}

TEST(Game, MaxPlayLength) {
  EXPECT_EQ(max_play_length(num(4)), 0u);
  EXPECT_EQ(max_play_length(g(atom(3), opts({g(2, 1)}))), 2u);
  for (const Game& a : small_corpus()) ASSERT_EQ(max_play_length(a), a.birthday());
}

TEST(Game, NoStructuralHashCollisionsOnCorpus) {
  // Distinct interned games with the same hash would be a collision; the
  // interner would still keep them apart, but hashing quality matters for
  // memo tables.
  std::unordered_map<std::uint64_t, std::uint64_t> by_hash;
  std::size_t collisions = 0;
  UniverseFilter f;
  f.max_day = 1;
  for (const Game& a : enumerate(f)) {
    auto [it, inserted] = by_hash.emplace(a.hash(), a.id());
    if (!inserted && it->second != a.id()) ++collisions;
  }
  EXPECT_EQ(collisions, 0u);
}

TEST(Game, StructuralOrderIsTotalAndConsistent) {
  std::vector<Game> corpus = small_corpus();
  if (corpus.size() > 400) corpus.erase(corpus.begin() + 400, corpus.end());
  for (const Game& a : corpus) {
    EXPECT_EQ(compare(a, a), 0);
    for (std::size_t j = 0; j < corpus.size(); j += 37) {
      const Game& b = corpus[j];
      EXPECT_EQ(compare(a, b) == 0, a == b);
      EXPECT_EQ(compare(a, b) < 0, compare(b, a) > 0);
    }
  }
}

}  // namespace
}  // namespace scoringcg
