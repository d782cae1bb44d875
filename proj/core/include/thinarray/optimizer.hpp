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

#ifndef THINARRAY_OPTIMIZER_HPP
#define THINARRAY_OPTIMIZER_HPP

#include "thinarray/array_gen.hpp"
#include "thinarray/emulator.hpp"
#include "thinarray/input_config.hpp"
#include "thinarray/net_sim.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace thinarray::opt
{
    struct Prediction
    {
        double mean_db;
        double p5_db;
    };

    // Anything mapping a design point to (mean SINR, 5th-percentile SINR).
    // Must be safe to call concurrently when optimize() runs with threads > 1.
    using Surrogate = std::function<Prediction(const InputConfig &)>;

    // Holds a reference: `models` must outlive the returned surrogate.
    Surrogate make_surrogate(const emu::EmulatorPair &models);

    struct TraceEntry
    {
        std::size_t evaluation; // 0-based evaluation index
        InputConfig input;
        Prediction prediction;
    };

    struct OptimizationResult
    {
        InputConfig best_input;
        double predicted_mean_db = 0.0;
        double predicted_p5_db = 0.0;
        bool feasible = false;
        double threshold_db = 0.0;
        std::size_t evaluations_used = 0;
        std::vector<TraceEntry> trace; // successive strict improvements
    };

    struct OptimizeOptions
    {
        double threshold_db = 6.0;
        std::size_t budget = 100000;
        std::uint64_t seed = 0;
        std::size_t threads = 1;
    };

    // Maximizes the predicted mean subject to predicted p5 > threshold.
    //
    // Candidates are ranked lexicographically: feasible before infeasible,
    // then higher mean (feasible) or smaller violation threshold - p5
    // (infeasible). Phase 1 spends floor(0.8 budget) (at least 1) evaluations
    // on uniform samples, sample i drawn from Rng(substream_seed(seed, i)).
    // Phase 2 runs a compass search from the best sample: +/- step along each
    // axis, projected onto the box, steps starting at 10% of each range and
    // halved after an unsuccessful sweep until they drop below 0.1%.
    OptimizationResult optimize(const Surrogate &surrogate, const Bounds &bounds, const OptimizeOptions &options);

    struct SlicePoint
    {
        double value;
        double mean_db;
        double p5_db;
    };

    // n_points evenly spaced values spanning the bounds of `axis` (the center
    // value alone when n_points == 1), other parameters fixed at `center`.
    std::vector<SlicePoint> slice_scan(const Surrogate &surrogate, const Bounds &bounds, const InputConfig &center,
                                       std::size_t axis, std::size_t n_points);

    struct LabeledGeometry
    {
        std::string label;
        array::ArrayGeometry geometry;
    };

    // 8x8 UPA at 0.5 wavelength spacing and a 64-element vertical line at
    // 0.796 wavelength spacing.
    std::vector<LabeledGeometry> reference_antennas();

    struct FamilyRow
    {
        std::string label;
        double mean_db;
        double p5_db;
    };

    struct FamilyOptions
    {
        std::size_t n_optimal_samples = 30;
        std::size_t n_random_configs = 300;
        net::NetworkConfig network{};
        net::ThinningSetup thinning{};
        std::size_t n_iter = 2000;
        std::uint64_t seed = 0;
        Bounds bounds{};
        std::size_t threads = 1;
    };

    // One scatter row per antenna: every reference (its own label), one mask
    // drawn from each of n_random_configs uniform configurations ("random"),
    // and n_optimal_samples masks drawn from `optimal` ("optimal"). Each
    // antenna is simulated as a fixed geometry with the same simulation seed
    // (common random numbers), so rows differ only through the antenna.
    std::vector<FamilyRow> compare_families(const InputConfig &optimal, std::span<const LabeledGeometry> references,
                                            const FamilyOptions &options);

} // namespace thinarray::opt

#endif
