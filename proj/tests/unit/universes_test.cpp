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

#include "scoringcg/universes.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "builders.hpp"
#include "scoringcg/errors.hpp"
#include "scoringcg/normal_play.hpp"

namespace scoringcg {
namespace {

using build::atom;
using build::g;
using build::num;
using build::opts;

std::vector<Game> pool(UniversePredicate p, unsigned day, unsigned max_options) {
  UniverseFilter f;
  f.predicate = p;
  f.max_day = day;
  f.max_options = max_options;
  return enumerate(f);
}

TEST(Universes, AtomicPredicates) {
  EXPECT_TRUE(is_left_atomic(g(atom(3), -2)));
  EXPECT_FALSE(is_right_atomic(g(atom(3), -2)));
  EXPECT_TRUE(is_atomic(num(0)));
  EXPECT_FALSE(is_atomic(g(0, 0)));
}

TEST(Universes, Stability) {
  EXPECT_FALSE(is_stable(g(atom(3), -2)));
  EXPECT_TRUE(is_stable(g(atom(2), opts({g(g(-5, 5), -5)}))));
  EXPECT_TRUE(is_stable(g(0, 0)));
  EXPECT_FALSE(is_stable(g(opts({g(atom(1), atom(-1))}), atom(0))));
}

TEST(Universes, Guaranteed) {
  // The diskonnect value <1 | ^2>: atom 2 against the atom 1 of the number.
  EXPECT_TRUE(is_guaranteed(g(num(1), atom(2))));
  EXPECT_FALSE(is_guaranteed(g(num(1), atom(0))));
  EXPECT_TRUE(is_guaranteed(g(atom(1), atom(2))));
  EXPECT_FALSE(is_guaranteed(g(atom(2), atom(1))));
  EXPECT_TRUE(is_guaranteed(g(g(1, 0), g(0, -1))));
  EXPECT_TRUE(is_guaranteed(hat(3)));
  // <<1|0> | ^0>: the Left option carries the atom 1 > 0.
  EXPECT_FALSE(is_guaranteed(g(g(1, 0), atom(0))));
  // Non-atomic games only constrain their atomic followers.
  EXPECT_TRUE(is_guaranteed(g(5, -5)));
}

TEST(Universes, DicotAndStewart) {
  EXPECT_TRUE(is_dicot(num(2)));
  EXPECT_FALSE(is_dicot(g(num(0), atom(0))));
  EXPECT_TRUE(is_dicot(g(g(1, 1), g(1, 1))));
  EXPECT_TRUE(is_dicot(g(atom(-1), atom(1))));
  EXPECT_FALSE(is_stewart(g(atom(-1), atom(1))));
  EXPECT_TRUE(is_stewart(g(num(0), atom(0))));
}

TEST(Universes, DayZeroCounts) {
  EXPECT_EQ(pool(UniversePredicate::kAll, 0, 0).size(), 9u);
  EXPECT_EQ(pool(UniversePredicate::kGuaranteed, 0, 0).size(), 6u);
  EXPECT_EQ(pool(UniversePredicate::kStewart, 0, 0).size(), 3u);
}

// Frozen after the first audited generation over scores {-1, 0, 1}.
TEST(Universes, FrozenDayOneCounts) {
  EXPECT_EQ(pool(UniversePredicate::kAll, 1, 1).size(), 144u);
  EXPECT_EQ(pool(UniversePredicate::kGuaranteed, 1, 1).size(), 62u);
  EXPECT_EQ(pool(UniversePredicate::kStable, 1, 1).size(), 62u);
  EXPECT_EQ(pool(UniversePredicate::kDicot, 1, 1).size(), 90u);
  EXPECT_EQ(pool(UniversePredicate::kStewart, 1, 1).size(), 30u);
  EXPECT_EQ(pool(UniversePredicate::kGuaranteed, 1, 0).size(), 4117u);
  EXPECT_EQ(pool(UniversePredicate::kAll, 1, 0).size(), 264196u);
  EXPECT_EQ(pool(UniversePredicate::kGuaranteed, 2, 1).size(), 4022u);
}

TEST(Universes, EnumerationIsDeterministicAndDeduplicated) {
  std::vector<Game> a = pool(UniversePredicate::kGuaranteed, 2, 1);
  std::vector<Game> b = pool(UniversePredicate::kGuaranteed, 2, 1);
  EXPECT_EQ(a, b);
  std::set<std::uint64_t> ids;
  for (const Game& x : a) ids.insert(x.id());
  EXPECT_EQ(ids.size(), a.size());
}

TEST(Universes, GuaranteedImpliesStable) {
  for (const Game& x : pool(UniversePredicate::kAll, 2, 1)) {
    if (is_guaranteed(x)) {
      ASSERT_TRUE(is_stable(x));
    }
  }
}

TEST(Universes, FiltersAreHereditary) {
  for (UniversePredicate p :
       {UniversePredicate::kGuaranteed, UniversePredicate::kDicot, UniversePredicate::kStewart}) {
    for (const Game& x : pool(p, 2, 1)) {
      for (const Game& f : followers(x)) ASSERT_TRUE(satisfies(f, p)) << predicate_name(p);
    }
  }
}

TEST(Universes, GuaranteedClosedUnderSumAndConjugate) {
  std::vector<Game> gs = pool(UniversePredicate::kGuaranteed, 2, 1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Game& a = gs[pick(rng)];
    const Game& b = gs[pick(rng)];
    ASSERT_TRUE(is_guaranteed(a + b));
    ASSERT_TRUE(is_guaranteed(~a));
  }
}

TEST(Universes, EveryEmittedGameRespectsTheFilter) {
  UniverseFilter f;
  f.predicate = UniversePredicate::kStewart;
  f.score_set = {Score(-1, 2), Score(1, 2)};
  f.max_day = 2;
  f.max_options = 1;
  for (const Game& x : enumerate(f)) {
    ASSERT_LE(x.birthday(), 2u);
    ASSERT_TRUE(is_stewart(x));
    for (const Game& y : followers(x)) {
      for (const Side* side : {&y.left(), &y.right()}) {
        if (side->is_atom()) {
          ASSERT_TRUE(side->score() == Score(-1, 2) || side->score() == Score(1, 2));
        }
      }
    }
  }
}

TEST(Universes, BoundsAreEnforced) {
  UniverseFilter f;
  f.score_set = {};
  EXPECT_THROW(enumerate(f), PreconditionError);
  f = UniverseFilter{};
  f.max_day = 3;
  EXPECT_THROW(enumerate(f), PreconditionError);
  f = UniverseFilter{};
  f.max_day = 2;
  try {
    enumerate(f);
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("max_pool"), std::string::npos);
  }
}

TEST(Universes, PredicateNames) {
  for (const char* name : {"all", "guaranteed", "stable", "dicot", "stewart"}) {
    ASSERT_TRUE(parse_predicate(name).has_value());
    EXPECT_EQ(predicate_name(*parse_predicate(name)), name);
  }
  EXPECT_FALSE(parse_predicate("misere").has_value());
}

}  // namespace
}  // namespace scoringcg
