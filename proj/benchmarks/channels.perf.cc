// Copyright 2026 The Scavenge Authors
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

#include "benchmark/benchmark.h"

#include "scavenge/channels.h"
#include "scavenge/haar.h"

using namespace scavenge;

static void BM_haar_unitary(benchmark::State &state) {
    const int dim = static_cast<int>(state.range(0));
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_unitary(dim, rng));
    }
}
BENCHMARK(BM_haar_unitary)->Arg(2)->Arg(3)->Arg(8);

static void BM_r_of_strength(benchmark::State &state) {
    int step = 0;
    for (auto _ : state) {
        step = step == 1000 ? 0 : step + 1;
        benchmark::DoNotOptimize(r_of_strength(step / 1000.0, 3));
    }
}
BENCHMARK(BM_r_of_strength);

static void BM_greedy_spin_lambda(benchmark::State &state) {
    const int twice_j = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_spin_lambda(Spin(twice_j)));
    }
}
BENCHMARK(BM_greedy_spin_lambda)->Arg(4)->Arg(64)->Arg(1000);

static void BM_weak_spin_apply(benchmark::State &state) {
    const Spin j(static_cast<int>(state.range(0)));
    const Eigen::MatrixXd lambda = greedy_spin_lambda(j);
    SpinDiagonalState s = SpinDiagonalState::pure_top(j);
    for (auto _ : state) {
        s = weak_spin_apply(s, 0.3, lambda);
        benchmark::DoNotOptimize(s.jz());
    }
}
BENCHMARK(BM_weak_spin_apply)->Arg(4)->Arg(64);
