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

#include "scavenge/strategies.h"

using namespace scavenge;

static void BM_egalitarian_step_bisection(benchmark::State &state) {
    double y = 0.5;
    for (auto _ : state) {
        y = egalitarian_step_ncopy(1000, y > 1e-3 ? y : 0.5);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_egalitarian_step_bisection);

static void BM_egalitarian_step_quadratic(benchmark::State &state) {
    double y = 0.5;
    for (auto _ : state) {
        y = egalitarian_step_ncopy_quadratic(1000, y > 1e-3 ? y : 0.5);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_egalitarian_step_quadratic);

static void BM_egalitarian_first_strengths(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(egalitarian_first_strengths_ncopy(1000, state.range(0)));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_egalitarian_first_strengths)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_privileged_optimize(benchmark::State &state) {
    ProblemParams p;
    p.dim = 2;
    p.copies = static_cast<int>(state.range(0));
    p.observers = 10000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(privileged_optimize(p));
    }
}
BENCHMARK(BM_privileged_optimize)->Arg(1)->Arg(1000);

static void BM_optimal_encoding(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_encoding(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_optimal_encoding)->Arg(10)->Arg(200)->Arg(2000);

static void BM_quadrature(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_first_fidelity_quadrature(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_quadrature)->Arg(10)->Arg(200);
