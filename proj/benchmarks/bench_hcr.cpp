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

#include "holevo/hcr.hpp"
#include "holevo/model.hpp"

namespace {

void BM_HcrQubitSpherical(benchmark::State& state) {
    const holevo::ModelPoint pt = holevo::qubit_bloch_spherical().evaluate(Eigen::Vector3d(0.5, 1.2, 0.3));
    const holevo::CostMatrix c = holevo::CostMatrix::identity(3);
    for (auto _ : state) benchmark::DoNotOptimize(holevo::hcr_bound(pt, c).value);
}
BENCHMARK(BM_HcrQubitSpherical);

// n copies of the (r, theta) qubit: the state lives in dimension 2^n.
void BM_HcrMultiCopy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const holevo::ModelPoint pt = holevo::multi_copy(holevo::qubit_r_theta(), n).evaluate(Eigen::Vector2d(0.5, 0.7));
    const holevo::CostMatrix c = holevo::CostMatrix::identity(2);
    for (auto _ : state) benchmark::DoNotOptimize(holevo::hcr_bound(pt, c).value);
}
BENCHMARK(BM_HcrMultiCopy)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
