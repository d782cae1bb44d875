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

#include "oracles.hpp"
#include "thinarray/array_gen.hpp"
#include "thinarray/net_sim.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace thinarray;
using namespace thinarray::net;

namespace
{
    NetworkConfig isolated_los()
    {
        NetworkConfig cfg;
        cfg.n_sites = 1;
        cfg.shadowing_enabled = false;
        cfg.los_mode = LosMode::always_los;
        return cfg;
    }

    Scenario drop_of_iteration(const NetworkConfig &cfg, std::uint64_t seed, std::size_t i)
    {
        Rng rng(substream_seed(iteration_seed(seed, i), 0));
        return drop_scenario(cfg, rng);
    }

    double distance(const Vec3 &a, const Vec3 &b)
    {
        return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
    }

    // Closed-form SNR of one isolated LOS link without shadowing.
    double closed_form_snr(const NetworkConfig &cfg, const Site &site, double array_gain_db)
    {
        const double d = distance(site.bs, site.ue);
        const double pl = 32.4 + 21.0 * std::log10(d) + 20.0 * std::log10(cfg.carrier_freq_ghz);
        const double g = oracle::element_gain_db_between(site.bs.x, site.bs.y, site.bs.z, site.ue.x, site.ue.y,
                                                         site.ue.z) +
                         array_gain_db;
        return oracle::link_budget_snr_db(cfg.tx_power_dbm, pl, g, cfg.bandwidth_mhz * 1e6, cfg.ue_noise_figure_db);
    }
} // namespace

TEST_SUITE("net_sim")
{
    TEST_CASE("los probability")
    {
        CHECK(los_probability(10) == 1.0);
        CHECK(los_probability(18) == 1.0);
        CHECK(los_probability(0) == 1.0);
        const double expected = 0.18 + std::exp(-100.0 / 36.0) * 0.82;
        CHECK(los_probability(100) == doctest::Approx(expected).epsilon(1e-14));
        CHECK(los_probability(100) == doctest::Approx(0.230985).epsilon(1e-6));
        CHECK(los_probability(18.0000001) == doctest::Approx(1.0).epsilon(1e-8));
    }

    TEST_CASE("path loss")
    {
        NetworkConfig cfg;
        cfg.carrier_freq_ghz = 1.0;
        CHECK(path_loss_db(cfg, 1.0, true) == doctest::Approx(32.4).epsilon(1e-14));
        cfg.carrier_freq_ghz = 28.0;
        CHECK(path_loss_db(cfg, 100.0, true) == doctest::Approx(32.4 + 42 + 20 * std::log10(28.0)).epsilon(1e-14));
        CHECK(path_loss_db(cfg, 100.0, true) == doctest::Approx(103.344).epsilon(1e-5));
        for (double d = 1.0; d < 2000.0; d *= 1.3)
            CHECK(path_loss_db(cfg, d, false) >= path_loss_db(cfg, d, true));
        const double nlos = 22.4 + 35.3 * std::log10(300.0) + 21.3 * std::log10(28.0);
        CHECK(path_loss_db(cfg, 300.0, false) == doctest::Approx(nlos).epsilon(1e-14));
        CHECK_THROWS_AS(path_loss_db(cfg, 0.5, true), std::invalid_argument);
    }

    TEST_CASE("percentile")
    {
        const std::vector<double> five{5, 1, 4, 2, 3};
        CHECK(percentile(five, 50) == 3.0);
        const std::vector<double> one{10};
        for (double p : {0.0, 5.0, 50.0, 100.0})
            CHECK(percentile(one, p) == 10.0);
        const std::vector<double> two{0, 10};
        CHECK(percentile(two, 25) == 2.5);
        CHECK(percentile(five, 0) == 1.0);
        CHECK(percentile(five, 100) == 5.0);
        CHECK_THROWS_AS(percentile(std::vector<double>{}, 5), std::invalid_argument);
        CHECK_THROWS_AS(percentile(five, 101), std::invalid_argument);

        Rng rng(1);
        std::vector<double> xs(101);
        for (auto &x : xs)
            x = rng.normal();
        double previous = -1e300;
        for (double p = 0; p <= 100; p += 0.5)
        {
            const double q = percentile(xs, p);
            CHECK(q >= previous);
            previous = q;
        }
    }

    TEST_CASE("site layouts")
    {
        NetworkConfig cfg;
        cfg.n_sites = 1;
        auto one = site_positions(cfg);
        REQUIRE(one.size() == 1);
        CHECK(one[0].x == 0.0);
        CHECK(one[0].y == 0.0);
        CHECK(one[0].z == cfg.bs_height_m);

        cfg.n_sites = 7;
        auto seven = site_positions(cfg);
        REQUIRE(seven.size() == 7);
        for (std::size_t k = 1; k < 7; ++k)
            CHECK(std::hypot(seven[k].x, seven[k].y) == doctest::Approx(cfg.isd_m).epsilon(1e-12));

        cfg.n_sites = 19;
        auto nineteen = site_positions(cfg);
        REQUIRE(nineteen.size() == 19);
        // Every site's nearest neighbor sits exactly one ISD away.
        for (std::size_t a = 0; a < 19; ++a)
        {
            double nearest = 1e300;
            for (std::size_t b = 0; b < 19; ++b)
                if (a != b)
                    nearest = std::min(nearest, std::hypot(nineteen[a].x - nineteen[b].x, nineteen[a].y - nineteen[b].y));
            CHECK(nearest == doctest::Approx(cfg.isd_m).epsilon(1e-9));
        }
    }

    TEST_CASE("drops stay in the front half of the serving hexagon")
    {
        for (int n_sites : {1, 7, 19})
        {
            NetworkConfig cfg;
            cfg.n_sites = n_sites;
            Rng rng(static_cast<std::uint64_t>(n_sites));
            for (int trial = 0; trial < 200; ++trial)
            {
                auto scenario = drop_scenario(cfg, rng);
                REQUIRE(scenario.sites.size() == static_cast<std::size_t>(n_sites));
                for (const auto &site : scenario.sites)
                {
                    const double dx = site.ue.x - site.bs.x;
                    const double dy = site.ue.y - site.bs.y;
                    CHECK(dx >= 0.0);
                    CHECK(std::hypot(dx, dy) >= cfg.min_2d_distance_m);
                    CHECK(std::hypot(dx, dy) <= cfg.isd_m / std::sqrt(3.0) + 1e-9);
                    for (double angle : {0.0, std::numbers::pi / 3, 2 * std::numbers::pi / 3})
                        CHECK(std::abs(dx * std::cos(angle) + dy * std::sin(angle)) <= cfg.isd_m / 2 + 1e-9);
                    CHECK(site.ue.z == cfg.ue_height_m);
                    CHECK(site.bs.z == cfg.bs_height_m);
                }
            }
        }
    }

    TEST_CASE("drops are deterministic per stream")
    {
        NetworkConfig cfg;
        Rng a(99), b(99);
        auto s1 = drop_scenario(cfg, a);
        auto s2 = drop_scenario(cfg, b);
        for (std::size_t k = 0; k < s1.sites.size(); ++k)
        {
            CHECK(s1.sites[k].ue.x == s2.sites[k].ue.x);
            CHECK(s1.sites[k].ue.y == s2.sites[k].ue.y);
        }
    }

    TEST_CASE("single element isolated link matches the closed-form budget")
    {
        const auto cfg = isolated_los();
        const array::ArrayGeometry single{{{0, 0}}};
        const std::uint64_t seed = 17;
        auto stats = simulate_geometry(single, cfg, 200, seed);
        REQUIRE(stats.samples_db.size() == 200);
        for (std::size_t i = 0; i < 200; ++i)
        {
            auto scenario = drop_of_iteration(cfg, seed, i);
            CHECK(std::abs(stats.samples_db[i] - closed_form_snr(cfg, scenario.sites[0], 0.0)) < 1e-9);
        }
    }

    TEST_CASE("thinned array isolated link adds the matched gain")
    {
        const auto cfg = isolated_los();
        const InputConfig input{0.7, 0.6, 2.0, 1.0};
        const std::uint64_t seed = 23;
        auto stats = simulate(input, cfg, {}, 100, seed);
        for (std::size_t i = 0; i < 100; ++i)
        {
            auto scenario = drop_of_iteration(cfg, seed, i);
            const double expected = closed_form_snr(cfg, scenario.sites[0], 10 * std::log10(64.0));
            CHECK(std::abs(stats.samples_db[i] - expected) < 1e-9);
        }
    }

    TEST_CASE("three extra dB of power shift every noise-limited sample by three dB")
    {
        auto cfg = isolated_los();
        auto low = simulate({0.5, 0.5, 1, 1}, cfg, {}, 100, 5);
        cfg.tx_power_dbm += 3.0;
        auto high = simulate({0.5, 0.5, 1, 1}, cfg, {}, 100, 5);
        for (std::size_t i = 0; i < 100; ++i)
            CHECK(std::abs(high.samples_db[i] - low.samples_db[i] - 3.0) < 1e-9);

        // Shadowing and random LOS draws are unaffected by the power change.
        NetworkConfig shadowed;
        shadowed.n_sites = 1;
        auto a = simulate_geometry(array::upa_geometry(4, 4, 0.5, 0.5), shadowed, 100, 8);
        shadowed.tx_power_dbm += 3.0;
        auto b = simulate_geometry(array::upa_geometry(4, 4, 0.5, 0.5), shadowed, 100, 8);
        for (std::size_t i = 0; i < 100; ++i)
            CHECK(std::abs(b.samples_db[i] - a.samples_db[i] - 3.0) < 1e-9);
    }

    TEST_CASE("statistics are bitwise identical across runs and worker counts")
    {
        const NetworkConfig cfg;
        const InputConfig input{0.8, 0.7, 5, 0.5};
        auto a = simulate(input, cfg, {}, 64, 3, 1);
        auto b = simulate(input, cfg, {}, 64, 3, 1);
        auto c = simulate(input, cfg, {}, 64, 3, 4);
        CHECK(a.samples_db == b.samples_db);
        CHECK(a.samples_db == c.samples_db);
        CHECK(a.mean_db == c.mean_db);
        CHECK(a.p5_db == c.p5_db);

        auto geom = array::upa_geometry(8, 8, 0.5, 0.5);
        auto g1 = simulate_geometry(geom, cfg, 64, 3, 1);
        auto g3 = simulate_geometry(geom, cfg, 64, 3, 3);
        CHECK(g1.samples_db == g3.samples_db);
    }

    TEST_CASE("removing an interfering site never lowers the tagged SINR")
    {
        NetworkConfig cfg;
        cfg.n_sites = 19;
        auto geom = array::upa_geometry(8, 8, 0.5, 0.5);
        for (std::size_t i = 0; i < 40; ++i)
        {
            const auto s = iteration_seed(4, i);
            Rng rng(substream_seed(s, 0));
            auto scenario = drop_scenario(cfg, rng);
            double previous = tagged_sinr_db(scenario, geom, cfg, s);
            while (scenario.sites.size() > 1)
            {
                scenario.sites.erase(scenario.sites.begin() + 1 + static_cast<long>(i % (scenario.sites.size() - 1)));
                const double current = tagged_sinr_db(scenario, geom, cfg, s);
                CHECK(current >= previous);
                previous = current;
            }
        }
    }

    TEST_CASE("high power makes the mean interference limited")
    {
        Rng rng(12);
        for (int trial = 0; trial < 4; ++trial)
        {
            const InputConfig input{rng.uniform(0.3, 1), rng.uniform(0.3, 1), rng.uniform(-1, 10), rng.uniform(-1, 10)};
            NetworkConfig cfg;
            std::vector<double> means;
            for (double power : {60.0, 70.0, 80.0, 90.0})
            {
                cfg.tx_power_dbm = power;
                means.push_back(simulate(input, cfg, {}, 300, 12 + trial).mean_db);
            }
            CHECK(means[1] - means[0] > means[2] - means[1]);
            CHECK(means[2] - means[1] > means[3] - means[2]);
            CHECK(std::abs(means[2] - means[1]) < 0.1);
        }
    }

    TEST_CASE("64-element vertical array gains exactly 64x over one element at boresight")
    {
        auto cfg = isolated_los();
        // Constructed drop: UE straight ahead of the panel in azimuth.
        Scenario scenario{{{0, {0, 0, cfg.bs_height_m}, {60, 0, cfg.ue_height_m}}}};
        const array::ArrayGeometry single{{{0, 0}}};
        const auto vertical = array::upa_geometry(64, 1, 0.5, 0.796);
        for (std::uint64_t s : {1ULL, 2ULL, 3ULL})
        {
            const double g1 = tagged_sinr_db(scenario, single, cfg, s);
            const double g64 = tagged_sinr_db(scenario, vertical, cfg, s);
            CHECK(std::abs(g64 - g1 - 10 * std::log10(64.0)) < 1e-9);
        }
    }

    TEST_CASE("p5 never exceeds the 95th percentile")
    {
        const NetworkConfig cfg;
        Rng rng(31);
        for (int trial = 0; trial < 5; ++trial)
        {
            InputConfig input{rng.uniform(0.3, 1), rng.uniform(0.3, 1), rng.uniform(-1, 10), rng.uniform(-1, 10)};
            auto stats = simulate(input, cfg, {}, 50, rng.next_u64());
            CHECK(stats.n_samples == 50);
            CHECK(stats.p5_db <= percentile(stats.samples_db, 95));
            CHECK(stats.mean_db == doctest::Approx(oracle::mean(stats.samples_db)).epsilon(1e-12));
        }
    }

    TEST_CASE("invalid requests")
    {
        const NetworkConfig cfg;
        CHECK_THROWS_AS(simulate({0.5, 0.5, 0, 0}, cfg, {}, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(simulate({0.2, 0.5, 0, 0}, cfg, {}, 10, 1), std::invalid_argument);
        CHECK_THROWS_AS(simulate({0.5, 0.5, 0, 0}, cfg, {100, 99, 66}, 10, 1), std::invalid_argument);
        CHECK_THROWS_AS(simulate_geometry({}, cfg, 10, 1), std::invalid_argument);
        NetworkConfig bad;
        bad.n_sites = 3;
        CHECK_THROWS_AS(simulate({0.5, 0.5, 0, 0}, bad, {}, 10, 1), ConfigError);
    }

    TEST_CASE("config parsing")
    {
        auto cfg = parse_network_config(R"({"tx_power_dbm": 40, "n_sites": 19, "shadowing_enabled": false, "los_mode": "nlos"})");
        CHECK(cfg.tx_power_dbm == 40);
        CHECK(cfg.n_sites == 19);
        CHECK_FALSE(cfg.shadowing_enabled);
        CHECK(cfg.los_mode == LosMode::always_nlos);
        CHECK(cfg.isd_m == 200);

        try
        {
            (void)parse_network_config(R"({"tx_power": 40})");
            FAIL("unknown key accepted");
        }
        catch (const ConfigError &e)
        {
            CHECK(e.key() == "tx_power");
            CHECK(std::string(e.what()).find("tx_power") != std::string::npos);
        }
        try
        {
            (void)parse_network_config(R"({"isd_m": "far"})");
            FAIL("string accepted");
        }
        catch (const ConfigError &e)
        {
            CHECK(e.key() == "isd_m");
        }
        try
        {
            (void)parse_network_config(R"({"isd_m": -5})");
            FAIL("negative distance accepted");
        }
        catch (const ConfigError &e)
        {
            CHECK(e.key() == "isd_m");
        }
        CHECK_THROWS_AS(parse_network_config("[1, 2]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_network_config("{"), std::invalid_argument);

        auto round = parse_network_config(network_config_to_json(cfg));
        CHECK(round.tx_power_dbm == cfg.tx_power_dbm);
        CHECK(round.los_mode == cfg.los_mode);
        CHECK(round.shadowing_enabled == cfg.shadowing_enabled);
    }

    TEST_CASE("noise power")
    {
        const NetworkConfig cfg;
        CHECK(cfg.noise_power_dbm() == doctest::Approx(-174 + 10 * std::log10(400e6) + 9).epsilon(1e-14));
    }
}
