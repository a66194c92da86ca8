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

#include "qpair/invariants.hpp"

namespace {

// Arg: rank of the sampled state. Rank 1 is the triple-root case.
void BM_Spectrum(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qpair::spectrum(st));
}
BENCHMARK(BM_Spectrum)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_SpectrumAgreement(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(8);
  for (auto _ : state) benchmark::DoNotOptimize(qpair::spectrum_agreement(st));
}
BENCHMARK(BM_SpectrumAgreement)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
