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

#include "watermelon/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

namespace watermelon::exact {

namespace bmp = boost::multiprecision;

void MelonConfig::validate() const {
  if (n < 1) throw DomainError("watermelon length n must be >= 1");
  if (p < 1) throw DomainError("number of paths p must be >= 1");
  if (h && *h < 0) throw DomainError("height cap h must be >= 0");
}

ExactInt HeightSpectrum::total() const {
  ExactInt sum = 0;
  for (const auto& [height, count] : counts) sum += count;
  return sum;
}

ExactRational HeightSpectrum::mean() const {
  ExactInt weighted = 0;
  for (const auto& [height, count] : counts) weighted += count * height;
  return ExactRational(weighted, total());
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    r /= static_cast<unsigned long>(i);  // exact: r == binomial(n-k+i, i)
  }
  return r;
}

std::int64_t divisor_count(std::int64_t k) {
  if (k < 1) throw DomainError("divisor_count needs k >= 1");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) count += (d * d == k) ? 1 : 2;
  }
  return count;
}

std::vector<std::int32_t> divisor_table(std::int64_t limit) {
  std::vector<std::int32_t> d(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0) + 1), 0);
  for (std::int64_t i = 1; i <= limit; ++i) {
    for (std::int64_t j = i; j <= limit; j += i) ++d[static_cast<std::size_t>(j)];
  }
  return d;
}

ExactInt catalan(int n) {
  if (n < 0) throw DomainError("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

ExactInt count_melons(int n, int p) {
  MelonConfig{n, p, std::nullopt}.validate();
  ExactRational product = 1;
  for (int j = 0; j < p; ++j) {
    product *= ExactRational(binomial(2 * n + 2 * j, n), binomial(n + 2 * j + 1, n));
  }
  if (bmp::denominator(product) != 1) {
    throw ConsistencyError("C(n,p) product is not an integer for n=" +
                           std::to_string(n) + ", p=" + std::to_string(p));
  }
  return bmp::numerator(product);
}

namespace {

// sum_{k in Z} [B(alpha - k*step) - B(beta - k*step)] for an accessor B that
// vanishes outside [0, top]. Walks k = 0, 1, 2, ... until both arguments drop
// below 0 and k = -1, -2, ... until both exceed `top`.
template <class Binom>
ExactInt reflection_sum(const Binom& B, std::int64_t top, std::int64_t alpha,
                        std::int64_t beta, std::int64_t step) {
  ExactInt sum = 0;
  for (std::int64_t k = 0; std::max(alpha, beta) - k * step >= 0; ++k) {
    sum += B(alpha - k * step);
    sum -= B(beta - k * step);
  }
  for (std::int64_t k = -1; std::min(alpha, beta) - k * step <= top; --k) {
    sum += B(alpha - k * step);
    sum -= B(beta - k * step);
  }
  return sum;
}

}  // namespace

ExactInt paths_avoiding_lines(std::int64_t u, std::int64_t d, std::int64_t b,
                              std::int64_t t) {
  if (u < 0 || d < 0) throw DomainError("u and d must be nonnegative");
  if (b < 1 || t < 1) throw DomainError("b and t must be positive");
  if (!(-b < u - d && u - d < t)) throw DomainError("need -b < u-d < t");
  const std::int64_t N = u + d;
  auto B = [N](std::int64_t k) { return binomial(N, k); };
  return reflection_sum(B, N, u, u + b, b + t);
}

BinomialRow::BinomialRow(std::int64_t N) : N_(N), zero_(0) {
  if (N < 0) throw DomainError("BinomialRow needs N >= 0");
  row_.resize(static_cast<std::size_t>(N + 1));
  row_[0] = 1;
  const std::int64_t half = N / 2;
  for (std::int64_t k = 1; k <= half; ++k) {
    ExactInt next = row_[static_cast<std::size_t>(k - 1)] * static_cast<unsigned long>(N - k + 1);
    next /= static_cast<unsigned long>(k);
    row_[static_cast<std::size_t>(k)] = std::move(next);
  }
  for (std::int64_t k = half + 1; k <= N; ++k) {
    row_[static_cast<std::size_t>(k)] = row_[static_cast<std::size_t>(N - k)];
  }
}

const ExactInt& BinomialRow::operator()(std::int64_t k) const noexcept {
  if (k < 0 || k > N_) return zero_;
  return row_[static_cast<std::size_t>(k)];
}

ExactInt bounded_path_count(const BinomialRow& row, int i, int j, int h) {
  if (i < 0 || j < 0 || h < 0 || 2 * i > h || 2 * j > h) return 0;
  const std::int64_t N = row.size();
  const std::int64_t n = N / 2;
  auto B = [&row](std::int64_t k) -> const ExactInt& { return row(k); };
  return reflection_sum(B, N, n - i + j, n + i + j + 1, h + 2);
}

ExactInt bounded_path_count(int n, int i, int j, int h) {
  if (n < 0) return 0;
  return bounded_path_count(BinomialRow(2 * n), i, j, h);
}

ExactInt bounded_dyck_count(int n, int h) {
  if (n < 0 || h < 0) throw DomainError("bounded_dyck_count needs n, h >= 0");
  const std::int64_t N = 2 * static_cast<std::int64_t>(n);
  const std::int64_t step = h + 2;
  ExactInt sum = catalan(n);
  for (std::int64_t k = 1; n - k * step + 1 >= 0; ++k) {
    const std::int64_t c = n - k * step;
    sum -= binomial(N, c - 1);
    sum += 2 * binomial(N, c);
    sum -= binomial(N, c + 1);
  }
  return sum;
}

ExactInt bareiss_determinant(std::vector<ExactInt> m, std::size_t dim) {
  if (m.size() != dim * dim) throw DomainError("matrix size mismatch");
  if (dim == 0) return 1;
  auto at = [&m, dim](std::size_t r, std::size_t c) -> ExactInt& { return m[r * dim + c]; };
  ExactInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == dim) return 0;
      for (std::size_t c = 0; c < dim; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
    }
    previous = at(k, k);
  }
  return sign * at(dim - 1, dim - 1);
}

ExactInt capped_melon_count(const BinomialRow& row, int p, int h) {
  if (p < 1) throw DomainError("p must be >= 1");
  if (h < 0) throw DomainError("h must be >= 0");
  const auto dim = static_cast<std::size_t>(p);
  std::vector<ExactInt> m(dim * dim);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      m[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)] =
          bounded_path_count(row, i, j, h);
    }
  }
  return bareiss_determinant(std::move(m), dim);
}

ExactInt capped_melon_count(int n, int p, int h) {
  MelonConfig{n, p, h}.validate();
  return capped_melon_count(BinomialRow(2 * n), p, h);
}

HeightSpectrum height_spectrum(int n, int p) {
  MelonConfig{n, p, std::nullopt}.validate();
  const BinomialRow row(2 * n);
  HeightSpectrum spectrum{n, p, {}};
  const int lowest = 2 * p - 1;
  const int highest = n + 2 * p - 2;
  ExactInt below = capped_melon_count(row, p, lowest - 1);
  for (int h = lowest; h <= highest; ++h) {
    ExactInt upto = capped_melon_count(row, p, h);
    spectrum.counts[h] = upto - below;
    below = std::move(upto);
  }
  if (below != count_melons(n, p)) {
    throw ConsistencyError("height spectrum does not sum to C(n,p)");
  }
  return spectrum;
}

ExactRational avg_height_exact(int n, int p) {
  MelonConfig{n, p, std::nullopt}.validate();
  const ExactInt total = count_melons(n, p);
  const BinomialRow row(2 * n);
  const int top = n + 2 * p - 2;
  // sum_{h=1}^{top} (C(n,p) - C(n,p,h-1))
  ExactInt reaching = 0;
  for (int h = 1; h <= top; ++h) {
    reaching += total;
    reaching -= capped_melon_count(row, p, h - 1);
  }
  if (capped_melon_count(row, p, top) != total) {
    throw ConsistencyError("C(n,p,n+2p-2) differs from C(n,p)");
  }
  return ExactRational(reaching, total);
}

ExactInt dp_oracle_count(int n, int p, std::optional<int> h) {
  if (n < 0 || n > kOracleMaxN) throw DomainError("dp oracle limited to 0 <= n <= 14");
  if (p < 1 || p > kOracleMaxP) throw DomainError("dp oracle limited to 1 <= p <= 3");
  if (h && *h < 0) throw DomainError("height cap must be >= 0");
  const int cap = h ? *h : n + 2 * p;
  if (cap < 2 * p - 2) return 0;

  // Heights packed base (cap+1); paths listed bottom to top.
  const std::int64_t base = cap + 1;
  auto encode = [base](const std::vector<int>& y) {
    std::int64_t key = 0;
    for (auto it = y.rbegin(); it != y.rend(); ++it) key = key * base + *it;
    return key;
  };
  auto decode = [base, p](std::int64_t key) {
    std::vector<int> y(static_cast<std::size_t>(p));
    for (auto& v : y) {
      v = static_cast<int>(key % base);
      key /= base;
    }
    return y;
  };

  std::vector<int> start(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) start[static_cast<std::size_t>(i)] = 2 * i;

  std::unordered_map<std::int64_t, ExactInt> layer{{encode(start), ExactInt(1)}};
  std::vector<int> next(static_cast<std::size_t>(p));
  for (int column = 0; column < 2 * n; ++column) {
    std::unordered_map<std::int64_t, ExactInt> advanced;
    for (const auto& [key, count] : layer) {
      const std::vector<int> y = decode(key);
      for (unsigned moves = 0; moves < (1u << p); ++moves) {
        bool ok = true;
        for (int i = 0; i < p && ok; ++i) {
          const auto idx = static_cast<std::size_t>(i);
          next[idx] = y[idx] + (((moves >> i) & 1u) ? 1 : -1);
          if (next[idx] < 0 || next[idx] > cap) ok = false;
          if (ok && i > 0 && next[idx] <= next[idx - 1]) ok = false;
        }
        if (ok) advanced[encode(next)] += count;
      }
    }
    layer = std::move(advanced);
  }
  const auto found = layer.find(encode(start));
  return found == layer.end() ? ExactInt(0) : found->second;
}

}  // namespace watermelon::exact
