// Copyright 2026 The weur Authors
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

#include <benchmark/benchmark.h>

#include <numbers>

#include "weur/bounds.hpp"
#include "weur/ensembles.hpp"
#include "weur/steering.hpp"
#include "weur/viewop.hpp"

namespace {

using namespace weur;

void BM_AverageViewNorm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto e = haar_random_bases(d, 4, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(operator_norm(average_view(e)));
  }
}
BENCHMARK(BM_AverageViewNorm)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_BoundQS(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto e = haar_random_bases(d, 4, 23);
  const double i_com = state_independent_icom(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_q_s(e.povms(), i_com));
  }
}
BENCHMARK(BM_BoundQS)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_NumericalOptimalBound(benchmark::State& state) {
  const auto e = haar_random_bases(static_cast<int>(state.range(0)), 3, 31);
  OptimizerOptions opts;
  opts.restarts = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerical_optimal_bound(e, RenyiOrder(1.0), opts).value);
  }
}
BENCHMARK(BM_NumericalOptimalBound)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NoiseThreshold(benchmark::State& state) {
  const auto obs = qubit_family(0.0, std::numbers::pi / 5).povms();
  const std::vector<double> w(3, 1.0 / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noise_threshold(obs, w, RenyiOrder::infinity()));
  }
}
BENCHMARK(BM_NoiseThreshold)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
