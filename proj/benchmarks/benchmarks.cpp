// SPDX-License-Identifier: Apache-2.0
//
// thinarray: network-level design of thinned antenna arrays
// Copyright (C) 2026 The thinarray Authors
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

#include "thinarray/array_gen.hpp"
#include "thinarray/beam_model.hpp"
#include "thinarray/emulator.hpp"
#include "thinarray/net_sim.hpp"
#include "thinarray/random.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace thinarray;

static void BM_GenerateMask(benchmark::State &state)
{
    const array::LatticeSpec lattice{100, 99, 0.8, 0.7};
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(array::generate_mask(lattice, {5, 1}, 64, seed++));
}
BENCHMARK(BM_GenerateMask);

static void BM_ArrayGain(benchmark::State &state)
{
    const auto geom = array::mask_to_geometry({100, 99, 0.8, 0.7},
                                              array::generate_mask({100, 99, 0.8, 0.7}, {5, 1}, 64, 1));
    const auto w = beam::conjugate_weights(geom, {1.4, 0.3});
    for (auto _ : state)
        benchmark::DoNotOptimize(beam::array_gain_db(geom, w, {1.5, -0.2}));
}
BENCHMARK(BM_ArrayGain);

static void BM_SimulateIterations(benchmark::State &state)
{
    const net::NetworkConfig cfg;
    const auto n_iter = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(net::simulate({0.8, 0.7, 5, 1}, cfg, {}, n_iter, seed++));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateIterations)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ForestPredict(benchmark::State &state)
{
    Rng rng(1);
    const Bounds bounds;
    emu::Dataset data;
    for (std::uint64_t i = 0; i < 400; ++i)
    {
        emu::DatasetRow row;
        row.seed = i;
        row.input = bounds.sample(rng);
        row.sinr_mean_db = 15 + row.input.alpha_y * 0.3 + rng.normal();
        row.sinr_p5_db = -8 + rng.normal();
        data.rows.push_back(row);
    }
    const auto model = emu::train_random_forest(data, {}, emu::Target::mean);
    for (auto _ : state)
        benchmark::DoNotOptimize(model.predict(bounds.sample(rng)));
}
BENCHMARK(BM_ForestPredict);

BENCHMARK_MAIN();
