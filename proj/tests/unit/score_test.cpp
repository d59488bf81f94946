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

#include "scoringcg/score.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

#include "scoringcg/errors.hpp"

namespace scoringcg {
namespace {

TEST(Score, ArithmeticIsExact) {
  Score third(1, 3);
  EXPECT_EQ(third + third + third, Score(1));
  EXPECT_EQ(Score(1, 2) - Score(3, 4), Score(-1, 4));
  EXPECT_EQ(Score(2, 3) * Score(3, 2), Score(1));
  EXPECT_EQ(Score(1) / Score(4), Score(1, 4));
  EXPECT_EQ(-Score(5, 7), Score(-5, 7));
}

TEST(Score, NormalizesSigns) {
  Score s(3, -6);
  EXPECT_EQ(s.numerator(), -1);
  EXPECT_EQ(s.denominator(), 2);
  EXPECT_FALSE(s.is_integer());
  EXPECT_TRUE(Score(4, 2).is_integer());
}

TEST(Score, Ordering) {
  EXPECT_LT(Score(-1, 2), Score(0));
  EXPECT_GT(Score(1, 3), Score(1, 4));
  EXPECT_EQ(std::max(Score(2), Score(5, 2)), Score(5, 2));
}

TEST(Score, MidpointLiesStrictlyBetween) {
  Score m = midpoint(Score(-5, 2), Score(3));
  EXPECT_EQ(m, Score(1, 4));
  EXPECT_LT(Score(-5, 2), m);
  EXPECT_LT(m, Score(3));
}

TEST(Score, ToStringAndParse) {
  EXPECT_EQ(Score(3).to_string(), "3");
  EXPECT_EQ(Score(-1, 2).to_string(), "-1/2");
  EXPECT_EQ(Score::parse("-10/4"), Score(-5, 2));
  EXPECT_EQ(Score::parse("0"), Score(0));
  for (const char* s : {"7", "-3", "1/2", "-22/7"}) {
    EXPECT_EQ(Score::parse(s).to_string(), s);
  }
}

TEST(Score, ParseRejectsMalformedText) {
  for (const char* s : {"", "-", "--3", "1/", "/2", "1/2/3", "a", "1.5", "+1", " 1"}) {
    EXPECT_THROW(Score::parse(s), ParseError) << s;
  }
}

TEST(Score, ZeroDenominatorRejected) {
  EXPECT_THROW(Score::parse("1/0"), ParseError);
  EXPECT_THROW(Score(1, 0), std::invalid_argument);
}

TEST(Score, HashAgreesWithEquality) {
  EXPECT_EQ(Score(2, 4).hash(), Score(1, 2).hash());
  std::unordered_set<Score> set{Score(1, 2), Score(2, 4), Score(-1, 2)};
  EXPECT_EQ(set.size(), 2u);
}

}  // namespace
}  // namespace scoringcg
