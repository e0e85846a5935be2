// Copyright 2026 The gffdisk Authors
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

// Serial reference vs OpenMP path for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "gffdisk/parallel.hpp"

using namespace gffdisk;

namespace {

const SpectralBasis& basis() {
    static const SpectralBasis b = build_basis(24, 24);
    return b;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::kParallel : Exec::kSerial; }

void BM_ModeCircleAverages(benchmark::State& state) {
    const DiskPoint z0(0.3, -0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mode_circle_averages(basis(), z0, 0.8, 1024, exec_of(state)));
}

void BM_GramMatrix(benchmark::State& state) {
    const QuadratureSpec q{64, 256};
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(basis(), 100, q, exec_of(state)));
}

void BM_ReplicatePairings(benchmark::State& state) {
    const std::vector<std::vector<double>> w{
        mode_circle_averages(basis(), DiskPoint(), 0.5, 1024, Exec::kSerial),
        mode_circle_averages(basis(), DiskPoint(0.4, 0.1), 0.9, 1024, Exec::kSerial)};
    for (auto _ : state)
        benchmark::DoNotOptimize(replicate_pairings(basis(), 1, 10000, w, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_ModeCircleAverages)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramMatrix)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReplicatePairings)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
