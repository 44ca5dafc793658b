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

// Self-check suites over all modules, plus informational reports on the
// places where the printed formulas and the computations disagree.

#ifndef WATERMELON_VERIFY_HPP_
#define WATERMELON_VERIFY_HPP_

#include <span>
#include <string>
#include <vector>

#include "watermelon/numeric.hpp"
#include "watermelon/sums.hpp"

namespace watermelon::verify {

enum class Level { quick, full };

struct CheckResult {
  std::string suite;
  bool passed = false;
  std::string detail;  // summary, or the failing case
};

struct Report {
  std::vector<CheckResult> checks;
  std::vector<std::string> info;
  bool passed() const;
};

struct Options {
  Level level = Level::quick;
  std::span<const sums::SingleSumGroup> single_groups = sums::single_sum_groups();
  std::span<const sums::DoubleSumTerm> double_terms = sums::double_sum_terms();
};

Report run(const Options& options);

// "[PASS] suite: detail" lines, then "[INFO] ..." lines.
std::string render(const Report& report);

}  // namespace watermelon::verify

#endif  // WATERMELON_VERIFY_HPP_
