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

#include "watermelon/asymptotics.hpp"
#include "watermelon/dirichlet.hpp"
#include "watermelon/special.hpp"

namespace {

using namespace watermelon;

void BM_ThetaBar(benchmark::State& state) {
  const HPReal u("0.37");
  for (auto _ : state) benchmark::DoNotOptimize(special::theta_bar(u));
}
BENCHMARK(BM_ThetaBar);

void BM_BinomQuotient(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(special::binom_quotient_approx(100, 0, 25));
}
BENCHMARK(BM_BinomQuotient);

void BM_CConst(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::c_const(a, b, HPReal("1e-8")));
}
BENCHMARK(BM_CConst)->Args({0, 0})->Args({2, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_ZContinued(benchmark::State& state) {
  const HPReal s("0.3");
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::Z_continued(1, 0, s, HPReal("1e-10")));
}
BENCHMARK(BM_ZContinued)->Unit(benchmark::kMillisecond);

void BM_GDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::g_direct(n, 4, HPReal("1e-30")));
}
BENCHMARK(BM_GDirect)->Arg(400)->Arg(1600);

void BM_ConvergenceRatio(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::convergence_ratio(n));
}
BENCHMARK(BM_ConvergenceRatio)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
