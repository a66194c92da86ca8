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

#include "qpair/canonical.hpp"
#include "qpair/classify.hpp"
#include "qpair/invariants.hpp"

namespace {

void BM_LocalInvariants(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(1);
  for (auto _ : state) benchmark::DoNotOptimize(qpair::local_invariants(st));
}
BENCHMARK(BM_LocalInvariants);

void BM_IsState(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(2);
  for (auto _ : state) benchmark::DoNotOptimize(qpair::is_state(st));
}
BENCHMARK(BM_IsState);

void BM_IsSeparable(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(3);
  for (auto _ : state) benchmark::DoNotOptimize(qpair::is_separable(st));
}
BENCHMARK(BM_IsSeparable);

void BM_DiagonalizeCross(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(4);
  for (auto _ : state) benchmark::DoNotOptimize(qpair::diagonalize_cross(st.c));
}
BENCHMARK(BM_DiagonalizeCross);

void BM_Rank2Canonical(benchmark::State& state) {
  const qpair::TwoQubitState st = qpair::random_state(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qpair::rank2_canonical(st));
}
BENCHMARK(BM_Rank2Canonical)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
