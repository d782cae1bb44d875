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
#include "thinarray/random.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace thinarray;
using namespace thinarray::array;

namespace
{
    bool mirror_symmetric(const ActivationMask &m)
    {
        for (int r = 0; r < m.n_rows(); ++r)
            for (int c = 0; c < m.n_cols(); ++c)
            {
                if (m.active(r, c) != m.active(r, m.n_cols() - 1 - c))
                    return false;
                if (m.active(r, c) != m.active(m.n_rows() - 1 - r, c))
                    return false;
            }
        return true;
    }

    int count_active(const ActivationMask &m)
    {
        int n = 0;
        for (auto v : m.cells())
            n += v;
        return n;
    }

    double mean_abs_delta_y(const LatticeSpec &lattice, const ActivationMask &m)
    {
        double sum = 0.0;
        for (const auto &e : mask_to_geometry(lattice, m).elements)
            sum += std::abs(e.y);
        return sum / m.n_active();
    }
} // namespace

TEST_SUITE("array_gen")
{
    TEST_CASE("log profile examples")
    {
        CHECK(log_profile_value({5, 5}, 0, 0) == 0.0);
        CHECK(log_profile_value({1, 0}, 2, 7) == -2.0);
        CHECK(log_profile_value({-1, -1}, 3, 4) == 7.0);
    }

    TEST_CASE("full quadrant selects every cell")
    {
        for (std::uint64_t seed : {0ULL, 1ULL, 77ULL})
        {
            auto m = generate_mask({4, 4, 0.5, 0.5}, {0, 0}, 16, seed);
            CHECK(m.n_active() == 16);
            CHECK(count_active(m) == 16);
        }
    }

    TEST_CASE("matches brute-force selection on a 6x6 lattice")
    {
        const LatticeSpec lattice{6, 6, 0.5, 0.5};
        auto mask = generate_mask(lattice, {2, 1}, 8, 42);
        auto expected = oracle::brute_force_mask(6, 6, 0.5, 0.5, 2, 1, 8, 42);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c)
                CHECK(mask.active(r, c) == (expected[static_cast<std::size_t>(r * 6 + c)] == 1));
    }

    TEST_CASE("brute-force agreement over random small lattices")
    {
        Rng rng(2024);
        for (int trial = 0; trial < 300; ++trial)
        {
            const int rows = 2 + static_cast<int>(rng.index_below(9));
            const int cols = 2 + static_cast<int>(rng.index_below(9));
            const double dy = rng.uniform(0.3, 1.0);
            const double dz = rng.uniform(0.3, 1.0);
            const double ay = rng.uniform(-1, 10);
            const double az = rng.uniform(-1, 10);
            const LatticeSpec lattice{rows, cols, dy, dz};
            const auto quadrant = static_cast<int>(lattice.quadrant_cells());
            const int n_active = 4 * (1 + static_cast<int>(rng.index_below(static_cast<std::size_t>(quadrant))));
            const auto seed = rng.next_u64();
            auto mask = generate_mask(lattice, {ay, az}, n_active, seed);
            auto expected = oracle::brute_force_mask(rows, cols, dy, dz, ay, az, n_active, seed);
            std::vector<std::uint8_t> as_bytes(expected.begin(), expected.end());
            CHECK(mask.cells() == as_bytes);
        }
    }

    TEST_CASE("count and mirror symmetry over random tuples")
    {
        Rng rng(7);
        for (int trial = 0; trial < 1000; ++trial)
        {
            const int rows = 2 + static_cast<int>(rng.index_below(40));
            const int cols = 2 + static_cast<int>(rng.index_below(40));
            const LatticeSpec lattice{rows, cols, rng.uniform(0.3, 1.0), rng.uniform(0.3, 1.0)};
            const auto quadrant = lattice.quadrant_cells();
            const int n_active = 4 * (1 + static_cast<int>(rng.index_below(std::min<std::size_t>(quadrant, 16))));
            const ProbabilityProfile profile{rng.uniform(-1, 10), rng.uniform(-1, 10)};
            auto m = generate_mask(lattice, profile, n_active, rng.next_u64());
            REQUIRE(count_active(m) == n_active);
            REQUIRE(mirror_symmetric(m));
        }
    }

    TEST_CASE("deterministic for identical inputs")
    {
        const LatticeSpec lattice{100, 99, 0.7, 0.6};
        CHECK(generate_mask(lattice, {3, 1}, 64, 5) == generate_mask(lattice, {3, 1}, 64, 5));
        CHECK_FALSE(generate_mask(lattice, {3, 1}, 64, 5) == generate_mask(lattice, {3, 1}, 64, 6));
    }

    TEST_CASE("concentration along y is monotone in alpha_y")
    {
        const LatticeSpec lattice{20, 21, 0.5, 0.5};
        double previous = std::numeric_limits<double>::infinity();
        for (double ay : {-1.0, 0.0, 2.0, 5.0, 10.0})
        {
            double total = 0.0;
            for (std::uint64_t seed = 0; seed < 100; ++seed)
                total += mean_abs_delta_y(lattice, generate_mask(lattice, {ay, 0.5}, 16, seed));
            const double average = total / 100.0;
            CHECK(average <= previous);
            previous = average;
        }
    }

    TEST_CASE("selection invariant under a constant shift of all scores")
    {
        // A negative alpha on an axis with a single eligible offset value
        // shifts every score by the same constant.
        for (std::uint64_t seed = 0; seed < 50; ++seed)
        {
            const LatticeSpec lattice{2, 12, 0.5, 0.9};
            auto base = generate_mask(lattice, {1.5, 0.0}, 8, seed);
            auto shifted = generate_mask(lattice, {1.5, -4.0}, 8, seed);
            auto shifted_down = generate_mask(lattice, {1.5, 7.0}, 8, seed);
            CHECK(base == shifted);
            CHECK(base == shifted_down);
        }
    }

    TEST_CASE("strong decay on the full lattice produces no underflow ties")
    {
        // Far cells score below -750.
        const LatticeSpec lattice{100, 99, 1.0, 1.0};
        const int keep = 2400;
        for (std::uint64_t seed : {3ULL, 4ULL})
        {
            auto m = generate_mask(lattice, {10, 10}, 4 * keep, seed);
            CHECK(count_active(m) == 4 * keep);
            double farthest_selected = 0.0;
            double nearest_skipped = 1e300;
            for (int r = 0; r < 50; ++r)
                for (int c = 0; c < 49; ++c)
                {
                    const double band = std::abs(c - 49.0) + std::abs(r - 49.5);
                    if (m.active(r, c))
                        farthest_selected = std::max(farthest_selected, band);
                    else
                        nearest_skipped = std::min(nearest_skipped, band);
                }
            CHECK(farthest_selected <= nearest_skipped + 1.0);
            CHECK(farthest_selected > 75.0);
        }
    }

    TEST_CASE("rejects invalid counts")
    {
        const LatticeSpec lattice{6, 6, 0.5, 0.5};
        CHECK_THROWS_AS(generate_mask(lattice, {0, 0}, 6, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_mask(lattice, {0, 0}, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_mask(lattice, {0, 0}, 40, 0), std::invalid_argument);
        CHECK_NOTHROW(generate_mask(lattice, {0, 0}, 36, 0));
        CHECK_THROWS_AS(generate_mask({1, 6, 0.5, 0.5}, {0, 0}, 4, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_mask({6, 6, 0.0, 0.5}, {0, 0}, 4, 0), std::invalid_argument);
    }

    TEST_CASE("odd dimensions exclude the center lines")
    {
        const LatticeSpec lattice{5, 7, 1.0, 1.0};
        CHECK(lattice.quadrant_cells() == 6);
        auto m = generate_mask(lattice, {0, 0}, 24, 1);
        for (int r = 0; r < 5; ++r)
            CHECK_FALSE(m.active(r, 3));
        for (int c = 0; c < 7; ++c)
            CHECK_FALSE(m.active(2, c));
    }

    TEST_CASE("mask geometry examples")
    {
        auto g1 = mask_to_geometry({1, 1, 0.5, 0.5}, ActivationMask(1, 1, {1}));
        REQUIRE(g1.size() == 1);
        CHECK(g1.elements[0] == Element{0, 0});

        auto g2 = mask_to_geometry({1, 2, 0.5, 0.5}, ActivationMask(1, 2, {1, 1}));
        REQUIRE(g2.size() == 2);
        CHECK(g2.elements[0] == Element{-0.25, 0});
        CHECK(g2.elements[1] == Element{0.25, 0});

        auto g3 = mask_to_geometry({3, 3, 1, 1}, ActivationMask(3, 3, {1, 0, 1, 0, 0, 0, 1, 0, 1}));
        REQUIRE(g3.size() == 4);
        std::set<std::pair<double, double>> points;
        for (auto e : g3.elements)
            points.insert({e.y, e.z});
        CHECK(points == std::set<std::pair<double, double>>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});

        CHECK_THROWS_AS(mask_to_geometry({2, 3, 1, 1}, ActivationMask(3, 3, {1, 0, 1, 0, 0, 0, 1, 0, 1})),
                        std::invalid_argument);
    }

    TEST_CASE("geometry from a generated mask is symmetric and on the grid")
    {
        const LatticeSpec lattice{10, 9, 0.6, 0.8};
        auto g = mask_to_geometry(lattice, generate_mask(lattice, {1, 1}, 16, 9));
        CHECK(g.size() == 16);
        std::set<std::pair<double, double>> points;
        for (auto e : g.elements)
            points.insert({e.y, e.z});
        for (auto e : g.elements)
        {
            CHECK(points.count({-e.y, e.z}) == 1);
            CHECK(points.count({e.y, -e.z}) == 1);
            const double col = e.y / 0.6 + 4.0;
            const double row = e.z / 0.8 + 4.5;
            CHECK(std::abs(col - std::round(col)) < 1e-9);
            CHECK(std::abs(row - std::round(row)) < 1e-9);
        }
    }

    TEST_CASE("mask validation")
    {
        CHECK_THROWS_AS(ActivationMask(2, 2, {1, 0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(ActivationMask(2, 2, {0, 0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(ActivationMask(2, 2, {1, 1, 1}), std::invalid_argument);
        CHECK_NOTHROW(ActivationMask(2, 2, {1, 1, 1, 1}));
    }

    TEST_CASE("mask text round trip")
    {
        auto m = generate_mask({8, 7, 0.5, 0.5}, {1, 2}, 12, 11);
        const auto text = m.to_text();
        CHECK(text.find('\n') == 7);
        CHECK(ActivationMask::from_text(text) == m);
        CHECK_THROWS_AS(ActivationMask::from_text("10\n1\n"), std::invalid_argument);
        CHECK_THROWS_AS(ActivationMask::from_text("1x\nx1\n"), std::invalid_argument);
    }

    TEST_CASE("upa geometry examples")
    {
        auto upa = upa_geometry(8, 8, 0.5, 0.5);
        REQUIRE(upa.size() == 64);
        double y_min = 1e9, y_max = -1e9, z_min = 1e9, z_max = -1e9;
        for (auto e : upa.elements)
        {
            y_min = std::min(y_min, e.y);
            y_max = std::max(y_max, e.y);
            z_min = std::min(z_min, e.z);
            z_max = std::max(z_max, e.z);
        }
        CHECK(y_min == doctest::Approx(-1.75).epsilon(1e-12));
        CHECK(y_max == doctest::Approx(1.75).epsilon(1e-12));
        CHECK(z_min == doctest::Approx(-1.75).epsilon(1e-12));
        CHECK(z_max == doctest::Approx(1.75).epsilon(1e-12));

        auto line = upa_geometry(64, 1, 0.5, 0.796);
        REQUIRE(line.size() == 64);
        double lo = 1e9, hi = -1e9;
        for (auto e : line.elements)
        {
            CHECK(e.y == 0.0);
            lo = std::min(lo, e.z);
            hi = std::max(hi, e.z);
        }
        CHECK(hi - lo == doctest::Approx(50.148).epsilon(1e-12));

        auto single = upa_geometry(1, 1, 0.5, 0.5);
        REQUIRE(single.size() == 1);
        CHECK(single.elements[0] == Element{0, 0});
    }

    TEST_CASE("activation map of a full lattice is all ones")
    {
        auto map = activation_probability_map({4, 4, 0.5, 0.5}, {0, 0}, 16, 25, 1);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                CHECK(map.probability(r, c) == 1.0);
    }

    TEST_CASE("activation map is exactly mirror symmetric and thread independent")
    {
        const LatticeSpec lattice{9, 12, 0.5, 0.7};
        auto a = activation_probability_map(lattice, {1, 0.5}, 12, 500, 3, 1);
        auto b = activation_probability_map(lattice, {1, 0.5}, 12, 500, 3, 4);
        CHECK(a.counts == b.counts);
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 12; ++c)
            {
                CHECK(a.probability(r, c) == a.probability(r, 11 - c));
                CHECK(a.probability(r, c) == a.probability(8 - r, c));
            }
    }

    TEST_CASE("activation map agrees with a high-sample oracle")
    {
        const int n = 6;
        const std::size_t samples = 10000;
        auto map = activation_probability_map({n, n, 0.5, 0.5}, {2, 1}, 8, samples, 123);

        const std::size_t oracle_samples = 1000000;
        std::vector<double> reference(n * n, 0.0);
        for (std::size_t i = 0; i < oracle_samples; ++i)
        {
            auto grid = oracle::brute_force_mask(n, n, 0.5, 0.5, 2, 1, 8, mix64(0xABCDEF ^ i));
            for (std::size_t k = 0; k < grid.size(); ++k)
                reference[k] += grid[k];
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
            {
                const double p_ref = reference[static_cast<std::size_t>(r * n + c)] / oracle_samples;
                const double sigma = std::sqrt(p_ref * (1 - p_ref) * (1.0 / samples + 1.0 / oracle_samples));
                CHECK(std::abs(map.probability(r, c) - p_ref) <= 3 * sigma + 1e-12);
            }
    }

    TEST_CASE("activation csv")
    {
        auto map = activation_probability_map({2, 2, 0.5, 0.5}, {0, 0}, 4, 3, 1);
        std::ostringstream os;
        write_activation_csv(os, map);
        CHECK(os.str() == "row,col,probability\n0,0,1.000000\n0,1,1.000000\n1,0,1.000000\n1,1,1.000000\n");
    }
}
