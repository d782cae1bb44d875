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

#include "thinarray/net_sim.hpp"

#include "thinarray/beam_model.hpp"
#include "thinarray/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace thinarray::net
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void require_positive(double value, const char *key)
        {
            if (!(value > 0.0) || !std::isfinite(value))
                throw ConfigError(key, "must be a finite positive number");
        }

        beam::Direction direction(const Vec3 &from, const Vec3 &to)
        {
            return beam::Direction::from_vector(to.x - from.x, to.y - from.y, to.z - from.z);
        }

        double distance_2d(const Vec3 &a, const Vec3 &b) { return std::hypot(b.x - a.x, b.y - a.y); }

        double distance_3d(const Vec3 &a, const Vec3 &b)
        {
            return std::sqrt((b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y) + (b.z - a.z) * (b.z - a.z));
        }

        bool inside_hexagon(double x, double y, double inradius)
        {
            for (int k = 0; k < 3; ++k)
            {
                const double angle = k * pi / 3.0;
                if (std::abs(x * std::cos(angle) + y * std::sin(angle)) > inradius)
                    return false;
            }
            return true;
        }

        SinrStats run_iterations(std::size_t n_iter, std::size_t threads, const std::function<double(std::size_t)> &one)
        {
            if (n_iter < 1)
                throw std::invalid_argument("simulate: n_iter must be at least 1");
            std::vector<double> samples(n_iter);
            parallel_for(n_iter, threads, [&](std::size_t i)
                         { samples[i] = one(i); });
            return summarize(std::move(samples));
        }
    }

    void NetworkConfig::validate() const
    {
        require_positive(carrier_freq_ghz, "carrier_freq_ghz");
        require_positive(bandwidth_mhz, "bandwidth_mhz");
        if (!std::isfinite(tx_power_dbm))
            throw ConfigError("tx_power_dbm", "must be finite");
        require_positive(ue_noise_figure_db, "ue_noise_figure_db");
        if (n_sites != 1 && n_sites != 7 && n_sites != 19)
            throw ConfigError("n_sites", "must be 1, 7 or 19");
        require_positive(isd_m, "isd_m");
        require_positive(bs_height_m, "bs_height_m");
        require_positive(ue_height_m, "ue_height_m");
        require_positive(shadowing_sigma_los_db, "shadowing_sigma_los_db");
        require_positive(shadowing_sigma_nlos_db, "shadowing_sigma_nlos_db");
        require_positive(min_2d_distance_m, "min_2d_distance_m");
        if (min_2d_distance_m >= 0.5 * isd_m)
            throw ConfigError("min_2d_distance_m", "must be smaller than half the inter-site distance");
        const double dh = bs_height_m - ue_height_m;
        if (std::sqrt(min_2d_distance_m * min_2d_distance_m + dh * dh) < 1.0)
            throw ConfigError("min_2d_distance_m", "shortest 3-D link must be at least 1 m");
    }

    double NetworkConfig::noise_power_dbm() const
    {
        return -174.0 + 10.0 * std::log10(bandwidth_mhz * 1e6) + ue_noise_figure_db;
    }

    double percentile(std::span<const double> samples, double p)
    {
        if (samples.empty())
            throw std::invalid_argument("percentile: empty sample set");
        if (!(p >= 0.0 && p <= 100.0))
            throw std::invalid_argument("percentile: p must lie in [0, 100]");
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        const double h = static_cast<double>(sorted.size() - 1) * p / 100.0;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    }

    SinrStats summarize(std::vector<double> samples_db)
    {
        if (samples_db.empty())
            throw std::invalid_argument("summarize: empty sample set");
        double sum = 0.0;
        for (double s : samples_db)
            sum += s;
        SinrStats stats;
        stats.n_samples = samples_db.size();
        stats.mean_db = sum / static_cast<double>(samples_db.size());
        stats.p5_db = percentile(samples_db, 5.0);
        stats.samples_db = std::move(samples_db);
        return stats;
    }

    double los_probability(double d_2d)
    {
        if (d_2d <= 18.0)
            return 1.0;
        return 18.0 / d_2d + std::exp(-d_2d / 36.0) * (1.0 - 18.0 / d_2d);
    }

    double path_loss_db(const NetworkConfig &cfg, double d_3d, bool los)
    {
        if (!(d_3d >= 1.0))
            throw std::invalid_argument("path_loss_db: 3-D distance below 1 m");
        const double pl_los = 32.4 + 21.0 * std::log10(d_3d) + 20.0 * std::log10(cfg.carrier_freq_ghz);
        if (los)
            return pl_los;
        const double pl_nlos = 22.4 + 35.3 * std::log10(d_3d) + 21.3 * std::log10(cfg.carrier_freq_ghz) -
                               0.3 * (cfg.ue_height_m - 1.5);
        return std::max(pl_los, pl_nlos);
    }

    std::vector<Vec3> site_positions(const NetworkConfig &cfg)
    {
        const double h = cfg.bs_height_m;
        std::vector<Vec3> sites{{0.0, 0.0, h}};
        if (cfg.n_sites >= 7)
            for (int k = 0; k < 6; ++k)
            {
                const double a = k * pi / 3.0;
                sites.push_back({cfg.isd_m * std::cos(a), cfg.isd_m * std::sin(a), h});
            }
        if (cfg.n_sites >= 19)
        {
            for (int k = 0; k < 6; ++k)
            {
                const double a = k * pi / 3.0;
                sites.push_back({2.0 * cfg.isd_m * std::cos(a), 2.0 * cfg.isd_m * std::sin(a), h});
            }
            for (int k = 0; k < 6; ++k)
            {
                const double a = pi / 6.0 + k * pi / 3.0;
                const double r = std::sqrt(3.0) * cfg.isd_m;
                sites.push_back({r * std::cos(a), r * std::sin(a), h});
            }
        }
        return sites;
    }

    Scenario drop_scenario(const NetworkConfig &cfg, Rng &rng)
    {
        const double inradius = 0.5 * cfg.isd_m;
        const double circumradius = cfg.isd_m / std::sqrt(3.0);
        Scenario scenario;
        int id = 0;
        for (const Vec3 &bs : site_positions(cfg))
        {
            double x = 0.0;
            double y = 0.0;
            // Rejection sampling from the bounding box of the front half-hexagon.
            do
            {
                x = rng.uniform(0.0, inradius);
                y = rng.uniform(-circumradius, circumradius);
            } while (!inside_hexagon(x, y, inradius) || std::hypot(x, y) < cfg.min_2d_distance_m);
            scenario.sites.push_back({id++, bs, {bs.x + x, bs.y + y, cfg.ue_height_m}});
        }
        return scenario;
    }

    double tagged_sinr_db(const Scenario &scenario, const array::ArrayGeometry &geom,
                          const NetworkConfig &cfg, std::uint64_t iteration_seed)
    {
        if (scenario.sites.empty() || scenario.sites.front().id != 0)
            throw std::invalid_argument("tagged_sinr_db: sites[0] must be the tagged site (id 0)");
        const Vec3 &tagged_ue = scenario.sites.front().ue;

        double signal_dbm = 0.0;
        double interference_mw = 0.0;
        for (const Site &site : scenario.sites)
        {
            const auto weights = beam::conjugate_weights(geom, direction(site.bs, site.ue));

            Rng link(substream_seed(iteration_seed, 2 + static_cast<std::uint64_t>(site.id)));
            const double u = link.uniform();
            const double z = link.normal();

            const double d2 = distance_2d(site.bs, tagged_ue);
            bool los = true;
            switch (cfg.los_mode)
            {
            case LosMode::stochastic:
                los = u < los_probability(d2);
                break;
            case LosMode::always_los:
                los = true;
                break;
            case LosMode::always_nlos:
                los = false;
                break;
            }
            double loss = path_loss_db(cfg, distance_3d(site.bs, tagged_ue), los);
            if (cfg.shadowing_enabled)
                loss += z * (los ? cfg.shadowing_sigma_los_db : cfg.shadowing_sigma_nlos_db);

            const double rx_dbm = cfg.tx_power_dbm - loss + beam::array_gain_db(geom, weights, direction(site.bs, tagged_ue));
            if (site.id == 0)
                signal_dbm = rx_dbm;
            else
                interference_mw += std::pow(10.0, rx_dbm / 10.0);
        }
        const double noise_mw = std::pow(10.0, cfg.noise_power_dbm() / 10.0);
        return signal_dbm - 10.0 * std::log10(noise_mw + interference_mw);
    }

    SinrStats simulate(const InputConfig &input, const NetworkConfig &cfg, const ThinningSetup &setup,
                       std::size_t n_iter, std::uint64_t seed, std::size_t threads)
    {
        validate_input(input);
        cfg.validate();
        const array::LatticeSpec lattice{setup.n_rows, setup.n_cols, input.d_y, input.d_z};
        const array::ProbabilityProfile profile{input.alpha_y, input.alpha_z};
        // Fail before spawning workers if the mask request is invalid.
        if (n_iter >= 1)
            (void)array::generate_mask(lattice, profile, setup.n_active, 0);

        return run_iterations(n_iter, threads, [&](std::size_t i)
                              {
            const std::uint64_t s = iteration_seed(seed, i);
            Rng drop_rng(substream_seed(s, 0));
            const Scenario scenario = drop_scenario(cfg, drop_rng);
            const auto mask = array::generate_mask(lattice, profile, setup.n_active, substream_seed(s, 1));
            return tagged_sinr_db(scenario, array::mask_to_geometry(lattice, mask), cfg, s); });
    }

    SinrStats simulate_geometry(const array::ArrayGeometry &geom, const NetworkConfig &cfg,
                                std::size_t n_iter, std::uint64_t seed, std::size_t threads)
    {
        cfg.validate();
        if (geom.empty())
            throw std::invalid_argument("simulate_geometry: empty geometry");
        return run_iterations(n_iter, threads, [&](std::size_t i)
                              {
            const std::uint64_t s = iteration_seed(seed, i);
            Rng drop_rng(substream_seed(s, 0));
            const Scenario scenario = drop_scenario(cfg, drop_rng);
            return tagged_sinr_db(scenario, geom, cfg, s); });
    }

} // namespace thinarray::net
