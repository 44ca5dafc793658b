// Copyright 2026 The Watermelon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MELON_CLI_HPP_
#define MELON_CLI_HPP_

#include <iosfwd>

namespace melon {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitConsistency = 3,
  kExitNumeric = 4,
};

// Parses argv and runs one subcommand (count, height, constants,
// convergence, verify). Data goes to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace melon

#endif  // MELON_CLI_HPP_
