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

#include "thinarray/pipeline.hpp"

#include "thinarray/parallel.hpp"
#include "thinarray/random.hpp"

#include <stdexcept>

namespace thinarray
{
    emu::Dataset generate_dataset(const net::NetworkConfig &cfg, const net::ThinningSetup &setup,
                                  std::size_t n_configs, std::size_t n_iter, std::uint64_t seed,
                                  std::size_t threads, const Bounds &bounds)
    {
        if (n_configs < 1)
            throw std::invalid_argument("generate_dataset: n_configs must be at least 1");
        if (n_iter < 1)
            throw std::invalid_argument("generate_dataset: n_iter must be at least 1");
        bounds.validate();
        cfg.validate();

        emu::Dataset data;
        data.rows.resize(n_configs);
        parallel_for(n_configs, threads, [&](std::size_t j)
                     {
            Rng rng(substream_seed(seed, j));
            auto &row = data.rows[j];
            row.input = bounds.sample(rng);
            row.seed = rng.next_u64();
            row.n_iter = static_cast<std::int64_t>(n_iter);
            const auto stats = net::simulate(row.input, cfg, setup, n_iter, row.seed);
            row.sinr_mean_db = stats.mean_db;
            row.sinr_p5_db = stats.p5_db; });
        return data;
    }

} // namespace thinarray
