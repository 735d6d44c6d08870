// SPDX-License-Identifier: Apache-2.0
//
// celledge: cell-edge link-level simulator for cell-free massive MIMO and RIS
// Copyright (C) 2026 celledge contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "celledge/cfmimo.hpp"
#include "celledge/experiment.hpp"
#include "celledge/ris.hpp"

using namespace celledge;

namespace {

experiment::CampaignConfig bench_config() {
    experiment::CampaignConfig c;
    c.trials = 16;
    c.realizations_per_trial = 2;
    c.n_per_surface = 100;
    return c;
}

void BM_CampaignSerial(benchmark::State& state) {
    const auto cfg = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(experiment::run_campaign_serial(cfg));
}
BENCHMARK(BM_CampaignSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CampaignParallel(benchmark::State& state) {
    const auto cfg = bench_config();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(experiment::run_campaign(cfg, workers));
}
BENCHMARK(BM_CampaignParallel)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_AlternatingOptimization(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    Stream rng(1);
    ris::RisChannels ch;
    ch.f = channel::draw_small_scale(100, 1, rng);
    ch.h = channel::draw_small_scale(static_cast<std::size_t>(n), 100, rng);
    ch.g = channel::draw_small_scale(static_cast<std::size_t>(n), 1, rng);
    ris::RisConfig rc;
    rc.k = 1;
    for (auto _ : state) benchmark::DoNotOptimize(ris::alternating_optimization(ch, 0, rc));
}
BENCHMARK(BM_AlternatingOptimization)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_ZfpEnsemble(benchmark::State& state) {
    Stream rng(2);
    const Eigen::MatrixXd alpha = Eigen::MatrixXd::Constant(100, 5, 1e-10);
    for (auto _ : state) {
        const auto ens = cfmimo::draw_estimate_ensemble(alpha, 200, 1e8, rng);
        benchmark::DoNotOptimize(cfmimo::mean_precoder_power(ens));
    }
}
BENCHMARK(BM_ZfpEnsemble)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
