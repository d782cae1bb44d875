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

#ifndef THINARRAY_IO_HPP
#define THINARRAY_IO_HPP

#include "thinarray/emulator.hpp"
#include "thinarray/optimizer.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// On-disk formats. All floating-point fields use the shortest decimal
// representation that parses back to the identical double.

namespace thinarray::io
{
    // File cannot be read or written. Derives from std::invalid_argument: it
    // is a usage error from the caller's point of view.
    class IoError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    std::string format_double(double value);
    // Throws std::invalid_argument unless the whole string is a number.
    double parse_double(std::string_view text);

    std::string read_file(const std::filesystem::path &path);
    void write_file(const std::filesystem::path &path, std::string_view contents);

    // Header `seed,n_iter,d_y,d_z,alpha_y,alpha_z,sinr_mean_db,sinr_p5_db`,
    // rows in dataset order.
    inline constexpr std::string_view dataset_header = "seed,n_iter,d_y,d_z,alpha_y,alpha_z,sinr_mean_db,sinr_p5_db";
    std::string dataset_to_csv(const emu::Dataset &data);
    emu::Dataset dataset_from_csv(std::string_view text);

    // `size,output,nrmse_mean,nrmse_std`.
    std::string cv_report_to_csv(const emu::CvReport &report);

    // `value,mean_db,p5_db`.
    std::string slice_to_csv(const std::vector<opt::SlicePoint> &points);
    std::vector<opt::SlicePoint> slice_from_csv(std::string_view text);

    // `label,mean_db,p5_db`.
    std::string families_to_csv(const std::vector<opt::FamilyRow> &rows);
    std::vector<opt::FamilyRow> families_from_csv(std::string_view text);

    std::string result_to_json(const opt::OptimizationResult &result, std::string_view manifest_ref = {});
    opt::OptimizationResult result_from_json(std::string_view text);

    // Splits one CSV line on commas (no quoting: none of the formats need it).
    std::vector<std::string_view> split_csv_line(std::string_view line);

} // namespace thinarray::io

#endif
