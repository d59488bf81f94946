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

#ifndef SCORINGCG_SCORE_HPP_
#define SCORINGCG_SCORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace scoringcg {

// Exact rational score. All atom values, Left/Right scores and comparison
// thresholds are Scores; no floating point is involved anywhere.
class Score {
 public:
  using Int = std::int64_t;

  constexpr Score() = default;
  Score(Int integer) : value_(integer) {}  // NOLINT: implicit by design of literals
  Score(Int numerator, Int denominator);

  Int numerator() const { return value_.numerator(); }
  Int denominator() const { return value_.denominator(); }
  bool is_integer() const { return value_.denominator() == 1; }

  Score operator-() const { return Score(-value_); }
  Score& operator+=(const Score& other) {
    value_ += other.value_;
    return *this;
  }
  Score& operator-=(const Score& other) {
    value_ -= other.value_;
    return *this;
  }
  friend Score operator+(Score a, const Score& b) { return a += b; }
  friend Score operator-(Score a, const Score& b) { return a -= b; }
  friend Score operator*(const Score& a, const Score& b) {
    return Score(a.value_ * b.value_);
  }
  friend Score operator/(const Score& a, const Score& b) {
    return Score(a.value_ / b.value_);
  }

  friend bool operator==(const Score& a, const Score& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Score& a, const Score& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "3", "-1/2".
  std::string to_string() const;

  // Accepts '-'? digits ('/' digits)?. Throws ParseError on malformed text or
  // a zero denominator.
  static Score parse(std::string_view text);

  std::size_t hash() const;

 private:
  explicit Score(boost::rational<Int> value) : value_(value) {}

  boost::rational<Int> value_{0};
};

inline Score midpoint(const Score& a, const Score& b) {
  return (a + b) / Score(2);
}

inline std::ostream& operator<<(std::ostream& os, const Score& s) {
  return os << s.to_string();
}

}  // namespace scoringcg

template <>
struct std::hash<scoringcg::Score> {
  std::size_t operator()(const scoringcg::Score& s) const { return s.hash(); }
};

#endif  // SCORINGCG_SCORE_HPP_
