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

#ifndef SCORINGCG_CLI_HPP_
#define SCORINGCG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace scoringcg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;     // check / cmp-num / eqzero answered "false"
inline constexpr int kUsage = 2;     // bad arguments, parse errors, precondition violations
inline constexpr int kResource = 3;  // a configured bound was exceeded

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scoringcg::cli

#endif  // SCORINGCG_CLI_HPP_
