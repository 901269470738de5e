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

#include <random>

#include "holevo/sdp.hpp"

namespace {

using holevo::RMatrix;

// min <C, X> subject to tr X = 1 on one block of size n.
holevo::SdpProblem smallest_eigenvalue_problem(int n) {
    std::mt19937_64 rng(static_cast<unsigned>(n));
    std::normal_distribution<double> g;
    RMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g(rng);
    holevo::SdpProblem p;
    p.blocks = {n};
    p.c = {0.5 * (m + m.transpose())};
    p.constraints.push_back({{RMatrix::Identity(n, n)}, 1.0});
    return p;
}

void BM_SdpUnitTrace(benchmark::State& state) {
    const holevo::SdpProblem p = smallest_eigenvalue_problem(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(holevo::solve(p));
}
BENCHMARK(BM_SdpUnitTrace)->Arg(4)->Arg(16)->Arg(48);

}  // namespace
