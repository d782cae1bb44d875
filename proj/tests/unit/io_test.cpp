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

#include "datasets.hpp"
#include "thinarray/io.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>

using namespace thinarray;
using namespace thinarray::io;

TEST_SUITE("io")
{
    TEST_CASE("doubles round trip through their shortest decimal form")
    {
        Rng rng(1);
        int checked = 0;
        while (checked < 20000)
        {
            const double x = std::bit_cast<double>(rng.next_u64());
            if (!std::isfinite(x))
                continue;
            const double back = parse_double(format_double(x));
            CHECK(std::bit_cast<std::uint64_t>(back) == std::bit_cast<std::uint64_t>(x));
            ++checked;
        }
        for (double x : {0.0, -0.0, 0.1, 1e-300, 5e-324, std::numeric_limits<double>::max(), -17.25})
            CHECK(std::bit_cast<std::uint64_t>(parse_double(format_double(x))) == std::bit_cast<std::uint64_t>(x));
        CHECK(format_double(0.1) == "0.1");
        CHECK(format_double(3.0) == "3");
        CHECK_THROWS_AS(parse_double("1.5x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_double("1,5"), std::invalid_argument);
    }

    TEST_CASE("dataset csv round trip is exact")
    {
        auto data = fixtures::reference_dataset(200, 3, 0.7);
        data.rows[0].seed = std::numeric_limits<std::uint64_t>::max();
        data.rows[1].sinr_mean_db = -1e-17;
        data.rows[2].input.alpha_y = std::nextafter(10.0, 0.0);
        const auto text = dataset_to_csv(data);
        CHECK(text.rfind(std::string(dataset_header) + "\n", 0) == 0);
        auto back = dataset_from_csv(text);
        REQUIRE(back.size() == data.size());
        for (std::size_t i = 0; i < data.size(); ++i)
        {
            CHECK(back.rows[i].seed == data.rows[i].seed);
            CHECK(back.rows[i].n_iter == data.rows[i].n_iter);
            CHECK(back.rows[i].input == data.rows[i].input);
            CHECK(back.rows[i].sinr_mean_db == data.rows[i].sinr_mean_db);
            CHECK(back.rows[i].sinr_p5_db == data.rows[i].sinr_p5_db);
        }
        CHECK(dataset_to_csv(back) == text);
    }

    TEST_CASE("dataset csv rejects malformed input")
    {
        CHECK_THROWS_AS(dataset_from_csv(""), std::invalid_argument);
        CHECK_THROWS_AS(dataset_from_csv("seed,n_iter\n1,2\n"), std::invalid_argument);
        const std::string header(dataset_header);
        CHECK_THROWS_AS(dataset_from_csv(header + "\n1,10,0.5,0.5,0,0,3\n"), std::invalid_argument);
        CHECK_THROWS_AS(dataset_from_csv(header + "\n1,10,0.5,0.5,0,x,3,4\n"), std::invalid_argument);
        CHECK_THROWS_AS(dataset_from_csv(header + "\n1,10,0.1,0.5,0,0,3,4\n"), std::invalid_argument);
        CHECK_THROWS_AS(dataset_from_csv(header + "\n1,10,0.5,0.5,0,0,3,4\n1,10,0.5,0.5,0,0,3,4\n"),
                        std::invalid_argument);
        auto ok = dataset_from_csv(header + "\r\n1,10,0.5,0.5,0,0,3,4\r\n");
        CHECK(ok.size() == 1);
    }

    TEST_CASE("slice and family tables round trip")
    {
        std::vector<opt::SlicePoint> slice{{0.3, 17.25, -8.125}, {0.65, 1.0 / 3.0, -2e-9}};
        const auto slice_text = slice_to_csv(slice);
        CHECK(slice_text.rfind("value,mean_db,p5_db\n", 0) == 0);
        auto slice_back = slice_from_csv(slice_text);
        REQUIRE(slice_back.size() == 2);
        CHECK(slice_back[1].mean_db == slice[1].mean_db);
        CHECK(slice_back[1].p5_db == slice[1].p5_db);

        std::vector<opt::FamilyRow> rows{{"upa_8x8", 16.75, -11.0}, {"optimal", 1.0 / 7.0, 0.1}, {"random", -3, 2}};
        const auto text = families_to_csv(rows);
        CHECK(text.rfind("label,mean_db,p5_db\n", 0) == 0);
        auto back = families_from_csv(text);
        REQUIRE(back.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
        {
            CHECK(back[i].label == rows[i].label);
            CHECK(back[i].mean_db == rows[i].mean_db);
            CHECK(back[i].p5_db == rows[i].p5_db);
        }
    }

    TEST_CASE("cross validation report csv")
    {
        emu::CvReport report{5, {{100, emu::Target::mean, 0.125, 0.5}, {100, emu::Target::p5, 0.25, 0.0}}};
        CHECK(cv_report_to_csv(report) == "size,output,nrmse_mean,nrmse_std\n100,mean,0.125,0.5\n100,p5,0.25,0\n");
    }

    TEST_CASE("optimization result round trip")
    {
        opt::OptimizationResult result;
        result.best_input = {0.866, 0.761, 9.02, 0.2};
        result.predicted_mean_db = 18.4;
        result.predicted_p5_db = -7.3;
        result.feasible = false;
        result.threshold_db = 6.0;
        result.evaluations_used = 100000;
        result.trace = {{0, {0.5, 0.5, 0, 0}, {10.0, -12.0}}, {17, result.best_input, {18.4, -7.3}}};
        const auto text = result_to_json(result, "result.json.manifest.json");
        auto back = result_from_json(text);
        CHECK(back.best_input == result.best_input);
        CHECK(back.predicted_mean_db == result.predicted_mean_db);
        CHECK(back.predicted_p5_db == result.predicted_p5_db);
        CHECK(back.feasible == result.feasible);
        CHECK(back.threshold_db == result.threshold_db);
        CHECK(back.evaluations_used == result.evaluations_used);
        REQUIRE(back.trace.size() == 2);
        CHECK(back.trace[1].evaluation == 17);
        CHECK(back.trace[1].prediction.p5_db == -7.3);
        CHECK(result_to_json(back, "result.json.manifest.json") == text);
        CHECK_THROWS_AS(result_from_json("{\"format_version\": 9}"), std::invalid_argument);
    }

    TEST_CASE("file helpers report unreadable and unwritable paths")
    {
        const auto dir = std::filesystem::temp_directory_path() / "thinarray_io_test";
        std::filesystem::create_directories(dir);
        write_file(dir / "a.txt", "hello\n");
        CHECK(read_file(dir / "a.txt") == "hello\n");
        CHECK_THROWS_AS(read_file(dir / "missing.txt"), IoError);
        CHECK_THROWS_AS(write_file(dir / "no" / "such" / "dir" / "x.txt", "x"), IoError);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("csv splitting")
    {
        auto f = split_csv_line("a,,b");
        REQUIRE(f.size() == 3);
        CHECK(f[1].empty());
        CHECK(split_csv_line("x").size() == 1);
    }
}
