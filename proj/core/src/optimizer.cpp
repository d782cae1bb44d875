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

#include "thinarray/optimizer.hpp"

#include "thinarray/parallel.hpp"
#include "thinarray/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thinarray::opt
{
    namespace
    {
        struct Candidate
        {
            InputConfig input;
            Prediction prediction;
        };

        class Ranking
        {
        public:
            explicit Ranking(double threshold) : threshold_(threshold) {}

            bool feasible(const Prediction &p) const { return p.p5_db > threshold_; }

            // Strictly better in the (feasibility, objective) order.
            bool better(const Prediction &a, const Prediction &b) const
            {
                const bool fa = feasible(a), fb = feasible(b);
                if (fa != fb)
                    return fa;
                if (fa)
                    return a.mean_db > b.mean_db;
                return threshold_ - a.p5_db < threshold_ - b.p5_db;
            }

        private:
            double threshold_;
        };
    }

    Surrogate make_surrogate(const emu::EmulatorPair &models)
    {
        return [&models](const InputConfig &x)
        {
            const auto [mean, p5] = models.predict(x);
            return Prediction{mean, p5};
        };
    }

    OptimizationResult optimize(const Surrogate &surrogate, const Bounds &bounds, const OptimizeOptions &options)
    {
        bounds.validate();
        if (options.budget < 1)
            throw std::invalid_argument("optimize: budget must be at least 1");
        const Ranking rank(options.threshold_db);

        const std::size_t n_samples = std::max<std::size_t>(1, options.budget * 4 / 5);
        std::vector<Candidate> samples(n_samples);
        parallel_for(n_samples, options.threads, [&](std::size_t i)
                     {
            Rng rng(substream_seed(options.seed, i));
            const InputConfig x = bounds.sample(rng);
            samples[i] = {x, surrogate(x)}; });

        OptimizationResult result;
        result.threshold_db = options.threshold_db;
        Candidate best = samples.front();
        result.trace.push_back({0, best.input, best.prediction});
        for (std::size_t i = 1; i < n_samples; ++i)
            if (rank.better(samples[i].prediction, best.prediction))
            {
                best = samples[i];
                result.trace.push_back({i, best.input, best.prediction});
            }

        std::size_t used = n_samples;
        std::array<double, InputConfig::dimension> step{};
        std::array<double, InputConfig::dimension> min_step{};
        for (std::size_t a = 0; a < step.size(); ++a)
        {
            step[a] = 0.1 * bounds.axes[a].width();
            min_step[a] = 0.001 * bounds.axes[a].width();
        }
        auto active = [&]
        {
            for (std::size_t a = 0; a < step.size(); ++a)
                if (step[a] >= min_step[a])
                    return true;
            return false;
        };

        while (used < options.budget && active())
        {
            bool improved = false;
            for (std::size_t a = 0; a < step.size() && used < options.budget; ++a)
            {
                if (step[a] < min_step[a])
                    continue;
                for (const double sign : {1.0, -1.0})
                {
                    if (used >= options.budget)
                        break;
                    InputConfig x = best.input;
                    x[a] = std::clamp(x[a] + sign * step[a], bounds.axes[a].low, bounds.axes[a].high);
                    if (x[a] == best.input[a])
                        continue;
                    const Prediction p = surrogate(x);
                    const std::size_t index = used++;
                    if (rank.better(p, best.prediction))
                    {
                        best = {x, p};
                        result.trace.push_back({index, x, p});
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved)
                for (auto &s : step)
                    s *= 0.5;
        }

        result.best_input = best.input;
        result.predicted_mean_db = best.prediction.mean_db;
        result.predicted_p5_db = best.prediction.p5_db;
        result.feasible = rank.feasible(best.prediction);
        result.evaluations_used = used;
        return result;
    }

    std::vector<SlicePoint> slice_scan(const Surrogate &surrogate, const Bounds &bounds, const InputConfig &center,
                                       std::size_t axis, std::size_t n_points)
    {
        bounds.validate();
        if (axis >= InputConfig::dimension)
            throw std::invalid_argument("slice_scan: axis index out of range [0, 3]");
        if (n_points < 1)
            throw std::invalid_argument("slice_scan: n_points must be at least 1");
        validate_input(center, bounds);

        std::vector<SlicePoint> out;
        out.reserve(n_points);
        const Interval range = bounds.axes[axis];
        for (std::size_t k = 0; k < n_points; ++k)
        {
            InputConfig x = center;
            if (n_points > 1)
                x[axis] = k + 1 == n_points ? range.high
                                            : range.low + range.width() * static_cast<double>(k) / static_cast<double>(n_points - 1);
            const Prediction p = surrogate(x);
            out.push_back({x[axis], p.mean_db, p.p5_db});
        }
        return out;
    }

    std::vector<LabeledGeometry> reference_antennas()
    {
        return {
            {"upa_8x8", array::upa_geometry(8, 8, 0.5, 0.5)},
            {"vertical_64x1", array::upa_geometry(64, 1, 0.5, 0.796)},
        };
    }

    std::vector<FamilyRow> compare_families(const InputConfig &optimal, std::span<const LabeledGeometry> references,
                                            const FamilyOptions &options)
    {
        validate_input(optimal, options.bounds);
        options.bounds.validate();
        options.network.validate();
        if (options.n_optimal_samples < 1)
            throw std::invalid_argument("compare_families: n_optimal_samples must be at least 1");
        if (options.n_iter < 1)
            throw std::invalid_argument("compare_families: n_iter must be at least 1");

        const std::size_t n_refs = references.size();
        const std::size_t n_random = options.n_random_configs;
        const std::size_t total = n_refs + n_random + options.n_optimal_samples;
        const std::uint64_t sim_seed = substream_seed(options.seed, 0);

        std::vector<FamilyRow> rows(total);
        parallel_for(total, options.threads, [&](std::size_t j)
                     {
            std::string label;
            array::ArrayGeometry geom;
            if (j < n_refs)
            {
                label = references[j].label;
                geom = references[j].geometry;
            }
            else
            {
                const std::uint64_t item_seed = substream_seed(options.seed, 1 + j);
                InputConfig config = optimal;
                label = "optimal";
                if (j < n_refs + n_random)
                {
                    Rng rng(substream_seed(item_seed, 0));
                    config = options.bounds.sample(rng);
                    label = "random";
                }
                const array::LatticeSpec lattice{options.thinning.n_rows, options.thinning.n_cols, config.d_y, config.d_z};
                const auto mask = array::generate_mask(lattice, {config.alpha_y, config.alpha_z},
                                                       options.thinning.n_active, substream_seed(item_seed, 1));
                geom = array::mask_to_geometry(lattice, mask);
            }
            const auto stats = net::simulate_geometry(geom, options.network, options.n_iter, sim_seed);
            rows[j] = {std::move(label), stats.mean_db, stats.p5_db}; });
        return rows;
    }

} // namespace thinarray::opt
