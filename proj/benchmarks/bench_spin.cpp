// Copyright 2026 The holevo Authors
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

#include "holevo/bayes.hpp"
#include "holevo/spin.hpp"

namespace {

void BM_SpinWeights(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(holevo::spin_weights(n, 0.7));
}
BENCHMARK(BM_SpinWeights)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CovariantMixedQubit(benchmark::State& state) {
    const holevo::CovariantQubitSpec spec{static_cast<int>(state.range(0)), [](double) { return 1.0; }, 128};
    for (auto _ : state) benchmark::DoNotOptimize(holevo::covariant_mixed_qubit_cost(spec).exact);
}
BENCHMARK(BM_CovariantMixedQubit)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
