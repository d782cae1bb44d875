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

#include "thinarray/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace thinarray::io
{
    using nlohmann::json;

    namespace
    {
        template <typename Int>
        Int parse_integer(std::string_view text, const char *what)
        {
            Int value{};
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw std::invalid_argument(std::string("invalid ") + what + " '" + std::string(text) + "'");
            return value;
        }

        // Calls fn(line_number, fields) for every non-empty line after the header.
        template <typename Fn>
        void for_each_record(std::string_view text, std::string_view header, std::size_t n_fields, Fn &&fn)
        {
            std::size_t pos = 0;
            std::size_t line_no = 0;
            bool saw_header = false;
            while (pos < text.size())
            {
                std::size_t eol = text.find('\n', pos);
                if (eol == std::string_view::npos)
                    eol = text.size();
                std::string_view line = text.substr(pos, eol - pos);
                pos = eol + 1;
                ++line_no;
                if (!line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                if (line.empty())
                    continue;
                if (!saw_header)
                {
                    if (line != header)
                        throw std::invalid_argument("CSV header mismatch: expected '" + std::string(header) + "'");
                    saw_header = true;
                    continue;
                }
                const auto fields = split_csv_line(line);
                if (fields.size() != n_fields)
                    throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": expected " +
                                                std::to_string(n_fields) + " fields");
                fn(line_no, fields);
            }
            if (!saw_header)
                throw std::invalid_argument("CSV: missing header '" + std::string(header) + "'");
        }

        json input_to_json(const InputConfig &x)
        {
            return {{"d_y", x.d_y}, {"d_z", x.d_z}, {"alpha_y", x.alpha_y}, {"alpha_z", x.alpha_z}};
        }

        InputConfig input_from_json(const json &j)
        {
            return {j.at("d_y").get<double>(), j.at("d_z").get<double>(), j.at("alpha_y").get<double>(),
                    j.at("alpha_z").get<double>()};
        }
    }

    std::string format_double(double value)
    {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
        if (ec != std::errc())
            throw std::runtime_error("format_double: conversion failed");
        return std::string(buf, ptr);
    }

    double parse_double(std::string_view text)
    {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
            throw std::invalid_argument("invalid number '" + std::string(text) + "'");
        return value;
    }

    std::string read_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open '" + path.string() + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write_file(const std::filesystem::path &path, std::string_view contents)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path.string() + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out)
            throw IoError("failed writing '" + path.string() + "'");
    }

    std::vector<std::string_view> split_csv_line(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t start = 0;
        while (true)
        {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string_view::npos)
            {
                out.push_back(line.substr(start));
                return out;
            }
            out.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
    }

    std::string dataset_to_csv(const emu::Dataset &data)
    {
        std::string out(dataset_header);
        out += '\n';
        for (const auto &r : data.rows)
        {
            out += std::to_string(r.seed) + ',' + std::to_string(r.n_iter) + ',' + format_double(r.input.d_y) + ',' +
                   format_double(r.input.d_z) + ',' + format_double(r.input.alpha_y) + ',' +
                   format_double(r.input.alpha_z) + ',' + format_double(r.sinr_mean_db) + ',' +
                   format_double(r.sinr_p5_db) + '\n';
        }
        return out;
    }

    emu::Dataset dataset_from_csv(std::string_view text)
    {
        emu::Dataset data;
        for_each_record(text, dataset_header, 8, [&](std::size_t, const std::vector<std::string_view> &f)
                        {
            emu::DatasetRow r;
            r.seed = parse_integer<std::uint64_t>(f[0], "seed");
            r.n_iter = parse_integer<std::int64_t>(f[1], "n_iter");
            r.input = {parse_double(f[2]), parse_double(f[3]), parse_double(f[4]), parse_double(f[5])};
            r.sinr_mean_db = parse_double(f[6]);
            r.sinr_p5_db = parse_double(f[7]);
            data.rows.push_back(r); });
        data.validate();
        return data;
    }

    std::string cv_report_to_csv(const emu::CvReport &report)
    {
        std::string out = "size,output,nrmse_mean,nrmse_std\n";
        for (const auto &c : report.cells)
            out += std::to_string(c.training_size) + ',' + std::string(emu::target_name(c.target)) + ',' +
                   format_double(c.nrmse_mean) + ',' + format_double(c.nrmse_std) + '\n';
        return out;
    }

    std::string slice_to_csv(const std::vector<opt::SlicePoint> &points)
    {
        std::string out = "value,mean_db,p5_db\n";
        for (const auto &p : points)
            out += format_double(p.value) + ',' + format_double(p.mean_db) + ',' + format_double(p.p5_db) + '\n';
        return out;
    }

    std::vector<opt::SlicePoint> slice_from_csv(std::string_view text)
    {
        std::vector<opt::SlicePoint> out;
        for_each_record(text, "value,mean_db,p5_db", 3, [&](std::size_t, const std::vector<std::string_view> &f)
                        { out.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2])}); });
        return out;
    }

    std::string families_to_csv(const std::vector<opt::FamilyRow> &rows)
    {
        std::string out = "label,mean_db,p5_db\n";
        for (const auto &r : rows)
            out += r.label + ',' + format_double(r.mean_db) + ',' + format_double(r.p5_db) + '\n';
        return out;
    }

    std::vector<opt::FamilyRow> families_from_csv(std::string_view text)
    {
        std::vector<opt::FamilyRow> out;
        for_each_record(text, "label,mean_db,p5_db", 3, [&](std::size_t, const std::vector<std::string_view> &f)
                        { out.push_back({std::string(f[0]), parse_double(f[1]), parse_double(f[2])}); });
        return out;
    }

    std::string result_to_json(const opt::OptimizationResult &result, std::string_view manifest_ref)
    {
        json trace = json::array();
        for (const auto &t : result.trace)
            trace.push_back({{"evaluation", t.evaluation},
                             {"input", input_to_json(t.input)},
                             {"mean_db", t.prediction.mean_db},
                             {"p5_db", t.prediction.p5_db}});
        json doc = {
            {"format_version", 1},
            {"best_input", input_to_json(result.best_input)},
            {"predicted_mean_db", result.predicted_mean_db},
            {"predicted_p5_db", result.predicted_p5_db},
            {"feasible", result.feasible},
            {"constraint_db", result.threshold_db},
            {"evaluations_used", result.evaluations_used},
            {"trace", trace},
        };
        if (!manifest_ref.empty())
            doc["manifest"] = manifest_ref;
        return doc.dump(1) + "\n";
    }

    opt::OptimizationResult result_from_json(std::string_view text)
    {
        try
        {
            const json doc = json::parse(text);
            if (doc.at("format_version").get<int>() != 1)
                throw std::invalid_argument("result: unsupported format_version");
            opt::OptimizationResult r;
            r.best_input = input_from_json(doc.at("best_input"));
            r.predicted_mean_db = doc.at("predicted_mean_db").get<double>();
            r.predicted_p5_db = doc.at("predicted_p5_db").get<double>();
            r.feasible = doc.at("feasible").get<bool>();
            r.threshold_db = doc.at("constraint_db").get<double>();
            r.evaluations_used = doc.at("evaluations_used").get<std::size_t>();
            for (const auto &t : doc.at("trace"))
                r.trace.push_back({t.at("evaluation").get<std::size_t>(), input_from_json(t.at("input")),
                                   {t.at("mean_db").get<double>(), t.at("p5_db").get<double>()}});
            return r;
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument(std::string("result: malformed document: ") + e.what());
        }
    }

} // namespace thinarray::io
