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

#ifndef THINARRAY_NET_SIM_HPP
#define THINARRAY_NET_SIM_HPP

#include "thinarray/array_gen.hpp"
#include "thinarray/input_config.hpp"
#include "thinarray/random.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Monte Carlo downlink simulator for a simplified urban micro-cell layout.
//
// Every base station carries the same array, faces +x, and serves one UE
// dropped in the front half of its hexagonal cell. Each station steers
// conjugate weights at its own UE; the tagged UE is the one served by the
// center site. Channels are a single geometric ray with street-canyon path
// loss, a Bernoulli LOS state and optional log-normal shadowing.
//
// Random streams of iteration i (s = iteration_seed(seed, i)):
//   substream_seed(s, 0)           -> drop_scenario()
//   substream_seed(s, 1)           -> generate_mask() (simulate() only)
//   substream_seed(s, 2 + site_id) -> LOS draw then shadowing draw of the
//                                     link from site `site_id` to the tagged UE

namespace thinarray::net
{
    enum class LosMode
    {
        stochastic, // LOS drawn from los_probability()
        always_los,
        always_nlos,
    };

    struct NetworkConfig
    {
        double carrier_freq_ghz = 28.0;
        double bandwidth_mhz = 400.0;
        double tx_power_dbm = 33.0;
        double ue_noise_figure_db = 9.0;
        int n_sites = 7;
        double isd_m = 200.0;
        double bs_height_m = 10.0;
        double ue_height_m = 1.5;
        double shadowing_sigma_los_db = 4.0;
        double shadowing_sigma_nlos_db = 7.82;
        double min_2d_distance_m = 10.0;
        bool shadowing_enabled = true;
        LosMode los_mode = LosMode::stochastic;

        // Throws ConfigError naming the first invalid field.
        void validate() const;

        // Thermal noise: -174 dBm/Hz + 10 log10(bandwidth) + noise figure.
        double noise_power_dbm() const;
    };

    class ConfigError : public std::invalid_argument
    {
    public:
        ConfigError(std::string key, const std::string &message)
            : std::invalid_argument("config key '" + key + "': " + message), key_(std::move(key)) {}
        const std::string &key() const { return key_; }

    private:
        std::string key_;
    };

    // JSON object with any subset of the NetworkConfig field names
    // (carrier_freq_ghz, ..., shadowing_enabled, los_mode). Unknown keys and
    // wrongly typed values raise ConfigError naming the key.
    NetworkConfig parse_network_config(std::string_view json_text);
    std::string network_config_to_json(const NetworkConfig &cfg);

    struct SinrStats
    {
        double mean_db = 0.0; // mean of per-iteration SINR in dB
        double p5_db = 0.0;   // 5th percentile of per-iteration SINR in dB
        std::size_t n_samples = 0;
        std::vector<double> samples_db; // per-iteration SINR, iteration order
    };

    // Linear interpolation between order statistics at h = (n - 1) p / 100.
    double percentile(std::span<const double> samples, double p);

    SinrStats summarize(std::vector<double> samples_db);

    // 1 for d <= 18 m, else 18/d + exp(-d/36) (1 - 18/d).
    double los_probability(double d_2d);

    // Street-canyon forms, before shadowing. NLOS is never below LOS.
    // Throws std::invalid_argument for d_3d < 1 m.
    double path_loss_db(const NetworkConfig &cfg, double d_3d, bool los);

    struct Vec3
    {
        double x;
        double y;
        double z;
    };

    struct Site
    {
        int id;   // 0 = center (tagged) site
        Vec3 bs;  // base station position
        Vec3 ue;  // served user position
    };

    struct Scenario
    {
        std::vector<Site> sites;
    };

    // Center site at the origin, then the first ring (distance isd, angles
    // 0, 60, ..., 300 deg) and, for 19 sites, the second ring (2 isd at
    // 0, 60, ...; sqrt(3) isd at 30, 90, ...). z = bs_height_m.
    std::vector<Vec3> site_positions(const NetworkConfig &cfg);

    // One UE per site, uniform over the front half (dx > 0) of the site's
    // hexagon (inradius isd / 2) at 2-D distance >= min_2d_distance_m.
    Scenario drop_scenario(const NetworkConfig &cfg, Rng &rng);

    constexpr std::uint64_t iteration_seed(std::uint64_t seed, std::size_t iteration)
    {
        return substream_seed(seed, iteration);
    }

    // SINR in dB of the tagged UE (site id 0, which must be sites[0]) for one
    // drop. Signal and interference powers are combined in linear scale.
    double tagged_sinr_db(const Scenario &scenario, const array::ArrayGeometry &geom,
                          const NetworkConfig &cfg, std::uint64_t iteration_seed);

    struct ThinningSetup
    {
        int n_rows = 100;
        int n_cols = 99;
        int n_active = 64;
    };

    // Fresh mask every iteration: the statistics describe the antenna family
    // induced by `input`. Throws std::invalid_argument for n_iter < 1 or an
    // out-of-bounds input; mask-generation errors propagate.
    SinrStats simulate(const InputConfig &input, const NetworkConfig &cfg, const ThinningSetup &setup,
                       std::size_t n_iter, std::uint64_t seed, std::size_t threads = 1);

    // Same Monte Carlo loop with one fixed geometry for every iteration.
    SinrStats simulate_geometry(const array::ArrayGeometry &geom, const NetworkConfig &cfg,
                                std::size_t n_iter, std::uint64_t seed, std::size_t threads = 1);

} // namespace thinarray::net

#endif
