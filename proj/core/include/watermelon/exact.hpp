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

// Exact enumeration of p-watermelons with a wall: p nonintersecting Dyck-type
// paths, path i running from (0, 2i) to (2n, 2i), the lowest one never going
// below y = 0. Everything here is exact big-integer arithmetic.

#ifndef WATERMELON_EXACT_HPP_
#define WATERMELON_EXACT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "watermelon/numeric.hpp"

namespace watermelon::exact {

// n: half-length, p: number of paths, h: optional height cap.
struct MelonConfig {
  int n = 1;
  int p = 1;
  std::optional<int> h;

  void validate() const;  // throws DomainError
};

// counts[h] = number of p-watermelons of length n whose height is exactly h.
struct HeightSpectrum {
  int n = 0;
  int p = 0;
  std::map<int, ExactInt> counts;

  ExactInt total() const;
  ExactRational mean() const;
};

// binomial(n, k) with the convention "0 unless 0 <= k <= n".
ExactInt binomial(std::int64_t n, std::int64_t k);

// Number of positive divisors; k >= 1.
std::int64_t divisor_count(std::int64_t k);

// d(1..limit) by a sieve; index 0 is unused.
std::vector<std::int32_t> divisor_table(std::int64_t limit);

ExactInt catalan(int n);

// C(n, p): all p-watermelons with a wall of length n.
ExactInt count_melons(int n, int p);

// Lattice paths from (0,0) to (u+d, u-d) touching neither y = -b nor y = t.
ExactInt paths_avoiding_lines(std::int64_t u, std::int64_t d, std::int64_t b,
                              std::int64_t t);

// m(n,i,j,h): paths (0,2i) -> (2n,2j) staying within 0 <= y <= h.
ExactInt bounded_path_count(int n, int i, int j, int h);

// m(n,h) = m(n,0,0,h), evaluated through the folded one-sided sum.
ExactInt bounded_dyck_count(int n, int h);

// C(n,p,h): p-watermelons of length n with height <= h (LGV determinant).
ExactInt capped_melon_count(int n, int p, int h);

HeightSpectrum height_spectrum(int n, int p);

// H(n,p), the exact average height.
ExactRational avg_height_exact(int n, int p);

// Brute-force transfer-matrix count used as an oracle for the determinant
// route. h == nullopt means no cap. Limited to n <= 14 and p <= 3.
ExactInt dp_oracle_count(int n, int p, std::optional<int> h);

inline constexpr int kOracleMaxN = 14;
inline constexpr int kOracleMaxP = 3;

// Row binomial(N, 0..N), built once and shared by every reflection sum at
// that N.
class BinomialRow {
 public:
  explicit BinomialRow(std::int64_t N);

  std::int64_t size() const noexcept { return N_; }
  // Zero outside [0, N].
  const ExactInt& operator()(std::int64_t k) const noexcept;

 private:
  std::int64_t N_;
  std::vector<ExactInt> row_;
  ExactInt zero_;
};

// m(n,i,j,h) against a prebuilt row binomial(2n, .).
ExactInt bounded_path_count(const BinomialRow& row, int i, int j, int h);

// C(n,p,h) against a prebuilt row binomial(2n, .).
ExactInt capped_melon_count(const BinomialRow& row, int p, int h);

// Fraction-free (Bareiss) determinant of a square matrix, row-major.
ExactInt bareiss_determinant(std::vector<ExactInt> matrix, std::size_t dim);

}  // namespace watermelon::exact

#endif  // WATERMELON_EXACT_HPP_
