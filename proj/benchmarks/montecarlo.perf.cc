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

#include "scavenge/montecarlo.h"
#include "scavenge/strategies.h"

using namespace scavenge;

static void BM_qudit_chain(benchmark::State &state) {
    SimConfig c;
    c.system = QuditSystem{static_cast<int>(state.range(0))};
    c.strengths = {1.0, 1.0, 1.0};
    c.trials = 10000;
    c.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}
BENCHMARK(BM_qudit_chain)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_spin_chain(benchmark::State &state) {
    const int copies = static_cast<int>(state.range(0));
    SimConfig c;
    c.system = SpinSystem{copies};
    c.strengths = egalitarian_schedule_ncopy(copies, 3).strengths;
    c.trials = 10000;
    c.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}
BENCHMARK(BM_spin_chain)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_haar_moments(benchmark::State &state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_haar_moments(dim, 10000, 1));
    }
}
BENCHMARK(BM_haar_moments)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
