// Copyright 2026 The ftlab Authors
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

#include "ftlab/effective.h"
#include "ftlab/hierarchy.h"
#include "ftlab/oqft.h"

namespace {

using namespace ftlab;

void BM_EffectiveChannelFiveQubit(benchmark::State &state) {
    const StabilizerCode code = five_qubit();
    const PauliChannel1 phys = biased_channel(0.0785, 0.06);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_channel(code, phys, workers));
    }
}
BENCHMARK(BM_EffectiveChannelFiveQubit)->Arg(1)->Arg(4);

void BM_EvaluatePoint(benchmark::State &state) {
    const StabilizerCode code = five_qubit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_point(code, 0.08, 0.06));
    }
}
BENCHMARK(BM_EvaluatePoint);

void BM_FindThreshold(benchmark::State &state) {
    const StabilizerCode code = five_qubit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_threshold(code, 0.06, RatioKind::P));
    }
}
BENCHMARK(BM_FindThreshold)->Unit(benchmark::kMillisecond);

void BM_SupGrid(benchmark::State &state) {
    const PauliChannel1 ch({0.9, 0.05, 0.02, 0.03});
    const auto res = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sup_inaccuracy_grid(ch, res));
    }
}
BENCHMARK(BM_SupGrid)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EaoqecPipelineCompose(benchmark::State &state) {
    const EaoqecSpec spec = bundled_eaoqec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eaoqec_pipeline(spec));
    }
}
BENCHMARK(BM_EaoqecPipelineCompose)->Unit(benchmark::kMillisecond);

void BM_FiveQubitSyndromeRecovery(benchmark::State &state) {
    const StabilizerCode code = five_qubit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(syndrome_recovery(code));
    }
}
BENCHMARK(BM_FiveQubitSyndromeRecovery)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
