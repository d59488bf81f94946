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

#ifndef SCORINGCG_ERRORS_HPP_
#define SCORINGCG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scoringcg {

// A computation would exceed a configured bound (pool size, board area,
// position count). The message names the bound.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& bound, std::size_t limit)
      : std::runtime_error("resource bound exceeded: " + bound + " > " +
                           std::to_string(limit)),
        bound_(bound),
        limit_(limit) {}

  const std::string& bound() const { return bound_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string bound_;
  std::size_t limit_;
};

// A theorem-backed query was called outside the hypothesis of that theorem,
// e.g. comparing a non-guaranteed game with a number.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text could not be parsed; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace scoringcg

#endif  // SCORINGCG_ERRORS_HPP_
