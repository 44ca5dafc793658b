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

#include <array>
#include <map>
#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "watermelon/exact.hpp"
#include "watermelon/sums.hpp"

using namespace watermelon;
using namespace watermelon::sums;

namespace {

constexpr SumMode kExact = SumMode::exact_rational;
constexpr SumMode kHP = SumMode::high_precision;

ExactRational ex(const SumValue& v) { return as_exact(v); }

// Second transcription of the single-sum combination, multiplied out per a:
// coefficient of S(n,a) as a polynomial c0 + c1 n + c2 n^2.
const std::map<int, std::array<int, 3>> kSingleByA{
    {0, {-24, -28, -20}}, {1, {6, 27, 15}}, {-1, {6, 27, 15}}, {2, {0, -18, -6}},
    {-2, {0, -18, -6}},   {3, {6, 5, 1}},   {-3, {6, 5, 1}},
};

// Second transcription of the 19-term double sum.
const std::vector<std::tuple<int, int, int>> kDoubleTerms{
    {1, -2, -2}, {-1, -1, -3}, {-2, -1, -2}, {1, -1, -1}, {2, -1, 0},  {-1, -1, 3}, {2, 0, -3},
    {-4, 0, 0},  {2, 0, 3},    {-1, 1, -3},  {-2, 1, -2}, {2, 1, -1},  {2, 1, 0},   {1, 1, 1},
    {-1, 1, 3},  {2, 2, -2},   {-2, 2, -1},  {-2, 2, 1},  {1, 2, 2},
};

ExactRational second_entry_S1(int n, const oracle::Pascal& C) {
  ExactRational total = 0;
  for (const auto& [a, c] : kSingleByA) total += (c[0] + c[1] * n + c[2] * n * n) * oracle::S1d(n, a, C);
  return total;
}

ExactRational second_entry_S2(int n, const oracle::Pascal& C) {
  ExactRational total = 0;
  for (const auto& [c, a, b] : kDoubleTerms) total += c * oracle::S2d(n, a, b, C);
  return total;
}

ExactRational second_entry_H2(int n, const oracle::Pascal& C) {
  const ExactRational r2 = ExactRational((n + 1) * (n + 2), 12 * (2 * n + 1));
  const int r3 = (n + 1) * (n + 2) * (n + 3);
  return r2 * (r3 * second_entry_S2(n, C) + second_entry_S1(n, C)) - 1;
}

HPReal rel_diff(const HPReal& x, const HPReal& y) { return abs(x - y) / std::max<HPReal>(abs(y), HPReal(1e-300)); }

}  // namespace

TEST_CASE("single sum examples") {
  CHECK(ex(single_sum(1, 1, kExact)) == 2);
  CHECK(ex(single_sum(2, 0, kExact)) == 1);
  CHECK(ex(single_sum(1, -1, kExact)) == 0);
}

TEST_CASE("single sum against the definition") {
  const oracle::Pascal C(60);
  for (int n = 1; n <= 30; ++n) {
    for (int a = -4; a <= 4; ++a) {
      const ExactRational v = ex(single_sum(n, a, kExact));
      REQUIRE(v == oracle::S1d(n, a, C));
      REQUIRE(v >= 0);
      if (n + a < 1) REQUIRE(v == 0);
    }
  }
}

TEST_CASE("double sum examples") {
  CHECK(ex(gcd_double_sum(1, 1, 1, kExact)) == ExactRational(5, 2));
  CHECK(ex(gcd_double_sum(1, -3, -3, kExact)) == 0);
  const oracle::Pascal C(4);
  ExactInt num = 0;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) num += oracle::trial_divisors(std::gcd(j, k)) * C(4, 2 - j) * C(4, 2 - k);
  CHECK(ex(gcd_double_sum(2, 0, 0, kExact)) == ExactRational(num, 36));
}

TEST_CASE("double sum against the definition") {
  const oracle::Pascal C(40);
  for (int n = 1; n <= 20; ++n)
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        const ExactRational v = ex(gcd_double_sum(n, a, b, kExact));
        REQUIRE(v == oracle::S2d(n, a, b, C));
        REQUIRE(v == ex(gcd_double_sum(n, b, a, kExact)));
      }
}

TEST_CASE("avg_height1_sum") {
  CHECK(ex(avg_height1_sum(1, kExact)) == 1);
  CHECK(ex(avg_height1_sum(2, kExact)) == ExactRational(3, 2));
  CHECK(ex(avg_height1_sum(10, kExact)) == exact::avg_height_exact(10, 1));
  for (int n = 1; n <= 50; ++n) REQUIRE(ex(avg_height1_sum(n, kExact)) == exact::avg_height_exact(n, 1));
}

TEST_CASE("avg_height2_sum") {
  CHECK(ex(avg_height2_sum(1, kExact)) == 3);
  CHECK(ex(avg_height2_sum(2, kExact)) == ExactRational(11, 3));
  for (int n = 1; n <= 30; ++n) REQUIRE(ex(avg_height2_sum(n, kExact)) == exact::avg_height_exact(n, 2));
}

TEST_CASE("double-entry transcription of the combinations") {
  const oracle::Pascal C(40);
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(ex(single_sum_combination(n, kExact)) == second_entry_S1(n, C));
    REQUIRE(ex(double_sum_combination(n, kExact)) == second_entry_S2(n, C));
    REQUIRE(second_entry_H2(n, C) == exact::avg_height_exact(n, 2));
  }

  // Tables compared entry by entry.
  std::map<int, std::array<long, 3>> from_table;
  for (const auto& g : single_sum_groups()) {
    // expand scale * n^n_power * prod(n + shift) into ascending powers
    std::vector<long> poly{static_cast<long>(g.scale)};
    for (int i = 0; i < g.n_power; ++i) poly.insert(poly.begin(), 0);
    for (int s : g.shifts) {
      std::vector<long> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * s;
        next[i + 1] += poly[i];
      }
      poly = next;
    }
    REQUIRE(poly.size() <= 3);
    for (const auto& [a, coef] : g.terms)
      for (std::size_t i = 0; i < poly.size(); ++i) from_table[a][i] += coef * poly[i];
  }
  REQUIRE(from_table.size() == kSingleByA.size());
  for (const auto& [a, c] : kSingleByA)
    for (std::size_t i = 0; i < 3; ++i) CHECK(from_table[a][i] == c[i]);

  std::map<std::pair<int, int>, int> printed, keyed;
  for (const auto& t : double_sum_terms()) printed[{t.a, t.b}] += t.coefficient;
  for (const auto& [c, a, b] : kDoubleTerms) keyed[{a, b}] += c;
  CHECK(double_sum_terms().size() == 19);
  CHECK(printed == keyed);
}

TEST_CASE("combinations vanish when every S is zero") {
  std::vector<SingleSumGroup> groups(single_sum_groups().begin(), single_sum_groups().end());
  for (auto& g : groups)
    for (auto& t : g.terms) t.second = 0;
  std::vector<DoubleSumTerm> terms(double_sum_terms().begin(), double_sum_terms().end());
  for (auto& t : terms) t.coefficient = 0;
  for (int n : {1, 2, 7}) {
    CHECK(ex(single_sum_combination(n, kExact, groups)) == 0);
    CHECK(ex(double_sum_combination(n, kExact, terms)) == 0);
    CHECK(as_hp(single_sum_combination(n, kHP, groups)) == 0);
    CHECK(as_hp(double_sum_combination(n, kHP, terms)) == 0);
  }
}

TEST_CASE("tampered table breaks formula equivalence") {
  std::vector<DoubleSumTerm> terms(double_sum_terms().begin(), double_sum_terms().end());
  terms[5].coefficient += 1;
  bool differs = false;
  for (int n = 1; n <= 5; ++n) differs |= ex(avg_height2_sum(n, kExact, terms)) != exact::avg_height_exact(n, 2);
  CHECK(differs);
}

TEST_CASE("mode consistency") {
  const unsigned bits = current_precision_bits();
  const HPReal sum_tol = ldexp(HPReal(1), -static_cast<int>(bits) + 20);
  for (int n : {1, 2, 5, 17, 50, 100}) {
    for (int a = -3; a <= 3; ++a) {
      REQUIRE(rel_diff(as_hp(single_sum(n, a, kHP)), to_hp(ex(single_sum(n, a, kExact)))) <= sum_tol);
    }
    for (int a = -2; a <= 2; ++a)
      for (int b = -3; b <= 3; ++b)
        REQUIRE(rel_diff(as_hp(gcd_double_sum(n, a, b, kHP)), to_hp(ex(gcd_double_sum(n, a, b, kExact)))) <= sum_tol);
  }
  // the assembled average cancels about n^5 worth of leading digits
  const HPReal avg_tol = ldexp(HPReal(1), -static_cast<int>(bits) + 64);
  for (int n : {1, 10, 100}) {
    CHECK(rel_diff(as_hp(avg_height2_sum(n, kHP)), to_hp(exact::avg_height_exact(n, 2))) <= avg_tol);
    CHECK(rel_diff(as_hp(avg_height1_sum(n, kHP)), to_hp(exact::avg_height_exact(n, 1))) <= avg_tol);
  }
}

TEST_CASE("as_exact rejects high-precision values") {
  CHECK_THROWS_AS(as_exact(single_sum(3, 0, kHP)), ConfigurationError);
  CHECK(as_hp(single_sum(2, 0, kExact)) == 1);
  CHECK_THROWS_AS(single_sum(0, 0, kExact), DomainError);
  CHECK_THROWS_AS(avg_height2_sum(0, kHP), DomainError);
}

TEST_CASE("rising_factorial") {
  CHECK(rising_factorial(5, 0) == 1);
  CHECK(rising_factorial(5, 3) == 210);
  CHECK(rising_factorial(5, -1) == 0);
}
