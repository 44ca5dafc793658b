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

// Closed sum formulas for the average height of 1- and 2-watermelons in
// terms of divisor-weighted binomial sums
//
//   S(n,a)   = sum_{k>=1} d(k) B(2n, n-k+a) / B(2n,n)
//   S(n,a,b) = sum_{j,k>=1} d(gcd(j,k)) B(2n, n-j+a) B(2n, n-k+b) / B(2n,n)^2
//
// Every quantity can be evaluated exactly (rationals) or in MPFR.

#ifndef WATERMELON_SUMS_HPP_
#define WATERMELON_SUMS_HPP_

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "watermelon/numeric.hpp"

namespace watermelon::sums {

// exact_rational is intended for n up to about 200; beyond that the
// rationals get large and high_precision is the practical choice.
enum class SumMode { exact_rational, high_precision };
inline constexpr int kExactModeGuidanceMaxN = 200;

using SumValue = std::variant<ExactRational, HPReal>;

HPReal as_hp(const SumValue& v);
// Throws ConfigurationError when `v` is not exact.
const ExactRational& as_exact(const SumValue& v);

// One product group of the single-sum combination S1(n):
//   scale * n^n_power * prod (n + shift) * sum coefficient * S(n, a)
struct SingleSumGroup {
  int scale;
  int n_power;
  std::vector<int> shifts;
  std::vector<std::pair<int, int>> terms;  // (a, coefficient)
};

// coefficient * S(n, a, b)
struct DoubleSumTerm {
  int coefficient;
  int a;
  int b;
};

std::span<const SingleSumGroup> single_sum_groups();
std::span<const DoubleSumTerm> double_sum_terms();

SumValue single_sum(int n, int a, SumMode mode);
SumValue gcd_double_sum(int n, int a, int b, SumMode mode);

// H(n,1) = (n+1)(S(n,1) - 2 S(n,0) + S(n,-1)) - 1
SumValue avg_height1_sum(int n, SumMode mode);

// S1(n), the single-sum part of H(n,2).
SumValue single_sum_combination(int n, SumMode mode,
                                std::span<const SingleSumGroup> groups = single_sum_groups());

// S2(n), the double-sum part of H(n,2).
SumValue double_sum_combination(int n, SumMode mode,
                                std::span<const DoubleSumTerm> terms = double_sum_terms());

// H(n,2) = (n+1)^(2)/(12(2n+1)) ((n+1)^(3) S2(n) + S1(n)) - 1, with rising
// factorial powers x^(k) = x(x+1)...(x+k-1).
SumValue avg_height2_sum(int n, SumMode mode,
                         std::span<const DoubleSumTerm> terms = double_sum_terms(),
                         std::span<const SingleSumGroup> groups = single_sum_groups());

// Rising factorial power x^(k); zero for k < 0.
ExactInt rising_factorial(const ExactInt& x, int k);

}  // namespace watermelon::sums

#endif  // WATERMELON_SUMS_HPP_
