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

#include <charconv>

#include "scoringcg/errors.hpp"

namespace scoringcg {

Score::Score(Int numerator, Int denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = boost::rational<Int>(numerator, denominator);
}

std::string Score::to_string() const {
  std::string out = std::to_string(value_.numerator());
  if (value_.denominator() != 1) {
    out += '/';
    out += std::to_string(value_.denominator());
  }
  return out;
}

namespace {

Score::Int parse_digits(std::string_view text, std::size_t offset) {
  if (text.empty() || text[0] < '0' || text[0] > '9') {
    throw ParseError("expected digits", offset);
  }
  Score::Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range", offset);
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected digits", offset);
  }
  return value;
}

}  // namespace

Score Score::parse(std::string_view text) {
  bool negative = false;
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    pos = 1;
  }
  std::string_view body = text.substr(pos);
  auto slash = body.find('/');
  Int num = parse_digits(body.substr(0, slash), pos);
  Int den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(body.substr(slash + 1), pos + slash + 1);
    if (den == 0) throw ParseError("zero denominator", pos + slash + 1);
  }
  return Score(negative ? -num : num, den);
}

std::size_t Score::hash() const {
  std::uint64_t h = static_cast<std::uint64_t>(value_.numerator()) *
                    0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(value_.denominator()) + 0x7F4A7C159E3779B9ULL +
       (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

}  // namespace scoringcg
