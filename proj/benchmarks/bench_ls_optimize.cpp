// Copyright 2026 The qpair Authors
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

#include "qpair/degree.hpp"

namespace {

void BM_LambdaForPure(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::construct_family(qpair::family::Werner{0.7});
  const auto psi = qpair::PureStateVector::from_amplitudes(qpair::Vec4c(0, 1, -1, 0) / std::sqrt(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(qpair::ls_lambda_for_pure(st, psi));
}
BENCHMARK(BM_LambdaForPure)->Unit(benchmark::kMicrosecond);

// Arg: number of restarts on a random full-rank entangled state.
void BM_LsOptimize(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(11);
  qpair::LsOptions o;
  o.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qpair::ls_optimize(st, o));
}
BENCHMARK(BM_LsOptimize)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
