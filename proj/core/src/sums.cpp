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

#include "watermelon/sums.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "watermelon/exact.hpp"

namespace watermelon::sums {

namespace {

// S1(n) =
//   -20 (n-1)(n+2) S(n,0) + 15 n (n+1) (S(n,-1) + S(n,1))
//   + (n+3)(6 S(n,-1) - 16 S(n,0) + 6 S(n,1))
//   + (n-2)(6 S(n,-1) + 8 S(n,0) + 6 S(n,1))
//   - 6 n (n+3)(S(n,-2) + S(n,2)) + (n+2)(n+3)(S(n,-3) + S(n,3))
const std::vector<SingleSumGroup>& single_groups_table() {
  static const std::vector<SingleSumGroup> table{
      {-20, 0, {-1, 2}, {{0, 1}}},
      {15, 1, {1}, {{-1, 1}, {1, 1}}},
      {1, 0, {3}, {{-1, 6}, {0, -16}, {1, 6}}},
      {1, 0, {-2}, {{-1, 6}, {0, 8}, {1, 6}}},
      {-6, 1, {3}, {{-2, 1}, {2, 1}}},
      {1, 0, {2, 3}, {{-3, 1}, {3, 1}}},
  };
  return table;
}

const std::vector<DoubleSumTerm>& double_terms_table() {
  static const std::vector<DoubleSumTerm> table{
      {1, -2, -2}, {-1, -1, -3}, {-2, -1, -2}, {1, -1, -1}, {2, -1, 0},
      {-1, -1, 3}, {2, 0, -3},   {-4, 0, 0},   {2, 0, 3},   {-1, 1, -3},
      {-2, 1, -2}, {2, 1, -1},   {2, 1, 0},    {1, 1, 1},   {-1, 1, 3},
      {2, 2, -2},  {-2, 2, -1},  {-2, 2, 1},   {1, 2, 2},
  };
  return table;
}

// Shared state for one n: weights w[j] proportional to B(2n, n-j) for
// 0 <= j <= n, the divisor table and the d(gcd(j,k)) matrix.
//
// Exact mode keeps w[j] = B(2n, n-j) as integers and divides by B(2n,n)
// (or its square) once at the end. High-precision mode keeps the ratios
// B(2n, n-j)/B(2n,n) built as running products (n-j+1)/(n+j).
template <class Weight>
class SumKernel {
 public:
  SumKernel(int n, int reach) : n_(n), reach_(reach) {
    if (n < 1) throw DomainError("sums need n >= 1");
    weights_.resize(static_cast<std::size_t>(n) + 1);
    if constexpr (std::is_same_v<Weight, ExactInt>) {
      const exact::BinomialRow row(2 * n);
      for (int j = 0; j <= n; ++j) weights_[static_cast<std::size_t>(j)] = row(n - j);
      norm_ = row(n);
    } else {
      weights_[0] = 1;
      for (int j = 1; j <= n; ++j) {
        Weight w = weights_[static_cast<std::size_t>(j - 1)];
        w *= n - j + 1;
        w /= n + j;
        weights_[static_cast<std::size_t>(j)] = std::move(w);
      }
    }
    const int limit = n + reach;
    divisors_ = exact::divisor_table(limit);
  }

  int n() const noexcept { return n_; }
  const Weight& norm() const noexcept { return norm_; }

  // w(n - k + a) relative index; zero when out of range.
  bool weight_at(int k, int a, const Weight*& out) const {
    const int j = std::abs(k - a);
    if (j > n_) return false;
    out = &weights_[static_cast<std::size_t>(j)];
    return true;
  }

  Weight single(int a) const {
    Weight sum = 0;
    const Weight* w = nullptr;
    for (int k = 1; k <= n_ + a; ++k) {
      if (weight_at(k, a, w)) sum += (*w) * divisors_[static_cast<std::size_t>(k)];
    }
    return sum;
  }

  Weight pair(int a, int b) const {
    Weight total = 0;
    const Weight* wj = nullptr;
    const Weight* wk = nullptr;
    for (int j = 1; j <= n_ + a; ++j) {
      if (!weight_at(j, a, wj)) continue;
      Weight inner = 0;
      for (int k = 1; k <= n_ + b; ++k) {
        if (!weight_at(k, b, wk)) continue;
        inner += (*wk) * divisors_[static_cast<std::size_t>(std::gcd(j, k))];
      }
      total += (*wj) * inner;
    }
    return total;
  }

 private:
  int n_;
  int reach_;
  std::vector<Weight> weights_;
  Weight norm_ = 1;
  std::vector<std::int32_t> divisors_;
};

// Offsets a used by the printed formulas stay within |a| <= 3.
constexpr int kReach = 4;

template <class T>
struct Traits;

template <>
struct Traits<ExactRational> {
  using Weight = ExactInt;
  static ExactRational single(const SumKernel<Weight>& k, int a) {
    return ExactRational(k.single(a), k.norm());
  }
  static ExactRational pair(const SumKernel<Weight>& k, int a, int b) {
    return ExactRational(k.pair(a, b), k.norm() * k.norm());
  }
  static ExactRational from_int(const ExactInt& v) { return ExactRational(v); }
};

template <>
struct Traits<HPReal> {
  using Weight = HPReal;
  static HPReal single(const SumKernel<Weight>& k, int a) { return k.single(a); }
  static HPReal pair(const SumKernel<Weight>& k, int a, int b) { return k.pair(a, b); }
  static HPReal from_int(const ExactInt& v) { return to_hp(v); }
};

template <class T>
T group_polynomial(const SingleSumGroup& g, int n) {
  ExactInt value = g.scale;
  for (int i = 0; i < g.n_power; ++i) value *= n;
  for (int shift : g.shifts) value *= n + shift;
  return Traits<T>::from_int(value);
}

template <class T>
T single_combination(const SumKernel<typename Traits<T>::Weight>& kernel,
                     std::span<const SingleSumGroup> groups) {
  T total = 0;
  for (const auto& g : groups) {
    T inner = 0;
    for (const auto& [a, coefficient] : g.terms) {
      inner += Traits<T>::single(kernel, a) * coefficient;
    }
    total += group_polynomial<T>(g, kernel.n()) * inner;
  }
  return total;
}

template <class T>
T double_combination(const SumKernel<typename Traits<T>::Weight>& kernel,
                     std::span<const DoubleSumTerm> terms) {
  T total = 0;
  for (const auto& t : terms) total += Traits<T>::pair(kernel, t.a, t.b) * t.coefficient;
  return total;
}

template <class T>
T height1(int n) {
  SumKernel<typename Traits<T>::Weight> kernel(n, kReach);
  T bracket = Traits<T>::single(kernel, 1) - 2 * Traits<T>::single(kernel, 0) +
              Traits<T>::single(kernel, -1);
  return bracket * (n + 1) - 1;
}

template <class T>
T height2(int n, std::span<const DoubleSumTerm> terms, std::span<const SingleSumGroup> groups) {
  SumKernel<typename Traits<T>::Weight> kernel(n, kReach);
  const ExactInt N = n;
  const T rising2 = Traits<T>::from_int(rising_factorial(N + 1, 2));
  const T rising3 = Traits<T>::from_int(rising_factorial(N + 1, 3));
  T s1 = single_combination<T>(kernel, groups);
  T s2 = double_combination<T>(kernel, terms);
  T prefactor = rising2 / (12 * (2 * n + 1));
  return prefactor * (rising3 * s2 + s1) - 1;
}

template <class Fn>
SumValue dispatch(SumMode mode, Fn&& fn) {
  if (mode == SumMode::exact_rational) return SumValue(fn(ExactRational{}));
  return SumValue(fn(HPReal{}));
}

}  // namespace

HPReal as_hp(const SumValue& v) {
  if (const auto* q = std::get_if<ExactRational>(&v)) return to_hp(*q);
  return std::get<HPReal>(v);
}

const ExactRational& as_exact(const SumValue& v) {
  if (const auto* q = std::get_if<ExactRational>(&v)) return *q;
  throw ConfigurationError("value was computed in high-precision mode, not exactly");
}

std::span<const SingleSumGroup> single_sum_groups() { return single_groups_table(); }
std::span<const DoubleSumTerm> double_sum_terms() { return double_terms_table(); }

ExactInt rising_factorial(const ExactInt& x, int k) {
  if (k < 0) return 0;
  ExactInt r = 1;
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

SumValue single_sum(int n, int a, SumMode mode) {
  return dispatch(mode, [&](auto tag) {
    using T = decltype(tag);
    SumKernel<typename Traits<T>::Weight> kernel(n, std::abs(a) + 1);
    return Traits<T>::single(kernel, a);
  });
}

SumValue gcd_double_sum(int n, int a, int b, SumMode mode) {
  return dispatch(mode, [&](auto tag) {
    using T = decltype(tag);
    SumKernel<typename Traits<T>::Weight> kernel(n, std::max(std::abs(a), std::abs(b)) + 1);
    return Traits<T>::pair(kernel, a, b);
  });
}

SumValue avg_height1_sum(int n, SumMode mode) {
  return dispatch(mode, [&](auto tag) { return height1<decltype(tag)>(n); });
}

SumValue single_sum_combination(int n, SumMode mode, std::span<const SingleSumGroup> groups) {
  return dispatch(mode, [&](auto tag) {
    using T = decltype(tag);
    SumKernel<typename Traits<T>::Weight> kernel(n, kReach);
    return single_combination<T>(kernel, groups);
  });
}

SumValue double_sum_combination(int n, SumMode mode, std::span<const DoubleSumTerm> terms) {
  return dispatch(mode, [&](auto tag) {
    using T = decltype(tag);
    SumKernel<typename Traits<T>::Weight> kernel(n, kReach);
    return double_combination<T>(kernel, terms);
  });
}

SumValue avg_height2_sum(int n, SumMode mode, std::span<const DoubleSumTerm> terms,
                         std::span<const SingleSumGroup> groups) {
  return dispatch(mode, [&](auto tag) { return height2<decltype(tag)>(n, terms, groups); });
}

}  // namespace watermelon::sums
