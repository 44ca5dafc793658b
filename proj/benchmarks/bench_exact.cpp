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

#include <benchmark/benchmark.h>

#include "watermelon/exact.hpp"
#include "watermelon/sums.hpp"

namespace {

using namespace watermelon;

void BM_CountMelons(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::count_melons(n, 3));
}
BENCHMARK(BM_CountMelons)->Arg(50)->Arg(200)->Arg(1000);

void BM_CappedCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::capped_melon_count(n, 3, n / 4));
}
BENCHMARK(BM_CappedCount)->Arg(20)->Arg(100)->Arg(400);

void BM_AvgHeightExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::avg_height_exact(n, 2));
}
BENCHMARK(BM_AvgHeightExact)->Arg(30)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_DpOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::dp_oracle_count(n, 2, std::nullopt));
}
BENCHMARK(BM_DpOracle)->Arg(6)->Arg(10);

void BM_AvgHeight2Sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto mode = state.range(1) == 0 ? sums::SumMode::exact_rational : sums::SumMode::high_precision;
  for (auto _ : state) benchmark::DoNotOptimize(sums::avg_height2_sum(n, mode));
}
BENCHMARK(BM_AvgHeight2Sum)->Args({30, 0})->Args({30, 1})->Args({100, 1})->Unit(benchmark::kMillisecond);

}  // namespace
