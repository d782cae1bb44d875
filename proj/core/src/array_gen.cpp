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

#include "thinarray/array_gen.hpp"

#include "thinarray/parallel.hpp"
#include "thinarray/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace thinarray::array
{
    void LatticeSpec::validate() const
    {
        if (n_rows < 1 || n_cols < 1)
            throw std::invalid_argument("lattice dimensions must be at least 1x1");
        if (!(d_y > 0.0) || !(d_z > 0.0) || !std::isfinite(d_y) || !std::isfinite(d_z))
            throw std::invalid_argument("lattice spacings d_y and d_z must be positive");
    }

    std::size_t LatticeSpec::quadrant_cells() const
    {
        return static_cast<std::size_t>(n_rows / 2) * static_cast<std::size_t>(n_cols / 2);
    }

    ActivationMask::ActivationMask(int n_rows, int n_cols, std::vector<std::uint8_t> cells)
        : n_rows_(n_rows), n_cols_(n_cols), n_active_(0), cells_(std::move(cells))
    {
        if (n_rows < 1 || n_cols < 1)
            throw std::invalid_argument("ActivationMask: shape must be at least 1x1");
        if (cells_.size() != static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols))
            throw std::invalid_argument("ActivationMask: cell count does not match shape");
        for (auto &c : cells_)
        {
            c = c ? 1 : 0;
            n_active_ += c;
        }
        if (n_active_ == 0)
            throw std::invalid_argument("ActivationMask: no active cell");
        for (int r = 0; r < n_rows_; ++r)
            for (int c = 0; c < n_cols_; ++c)
                if (active(r, c) != active(r, n_cols_ - 1 - c) || active(r, c) != active(n_rows_ - 1 - r, c))
                    throw std::invalid_argument("ActivationMask: grid is not mirror symmetric");
    }

    std::string ActivationMask::to_text() const
    {
        std::string out;
        out.reserve(static_cast<std::size_t>(n_rows_) * (n_cols_ + 1));
        for (int r = 0; r < n_rows_; ++r)
        {
            for (int c = 0; c < n_cols_; ++c)
                out.push_back(active(r, c) ? '1' : '0');
            out.push_back('\n');
        }
        return out;
    }

    ActivationMask ActivationMask::from_text(std::string_view text)
    {
        std::vector<std::uint8_t> cells;
        int rows = 0;
        int cols = -1;
        std::size_t pos = 0;
        while (pos < text.size())
        {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            pos = eol + 1;
            if (line.empty())
                continue;
            if (cols >= 0 && static_cast<int>(line.size()) != cols)
                throw std::invalid_argument("mask text: ragged rows");
            cols = static_cast<int>(line.size());
            for (char ch : line)
            {
                if (ch != '0' && ch != '1')
                    throw std::invalid_argument("mask text: expected only '0' and '1'");
                cells.push_back(ch == '1');
            }
            ++rows;
        }
        if (rows == 0)
            throw std::invalid_argument("mask text: empty");
        return ActivationMask(rows, cols, std::move(cells));
    }

    ActivationMask generate_mask(const LatticeSpec &lattice, const ProbabilityProfile &profile,
                                 int n_active, std::uint64_t seed)
    {
        lattice.validate();
        if (n_active < 4 || n_active % 4 != 0)
            throw std::invalid_argument("generate_mask: n_active must be a positive multiple of 4");
        const std::size_t per_quadrant = static_cast<std::size_t>(n_active / 4);
        if (per_quadrant > lattice.quadrant_cells())
            throw std::invalid_argument("generate_mask: n_active / 4 = " + std::to_string(per_quadrant) +
                                        " exceeds the " + std::to_string(lattice.quadrant_cells()) +
                                        " eligible quadrant cells");

        const int q_rows = lattice.n_rows / 2;
        const int q_cols = lattice.n_cols / 2;
        const double center_row = 0.5 * (lattice.n_rows - 1);
        const double center_col = 0.5 * (lattice.n_cols - 1);

        Rng rng(seed);
        std::vector<double> score(static_cast<std::size_t>(q_rows) * q_cols);
        for (int r = 0; r < q_rows; ++r)
        {
            const double delta_z = (center_row - r) * lattice.d_z;
            for (int c = 0; c < q_cols; ++c)
            {
                const double delta_y = (center_col - c) * lattice.d_y;
                score[static_cast<std::size_t>(r) * q_cols + c] =
                    std::log(rng.uniform()) + log_profile_value(profile, delta_y, delta_z);
            }
        }

        std::vector<std::size_t> order(score.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto better = [&](std::size_t a, std::size_t b)
        {
            if (score[a] != score[b])
                return score[a] > score[b];
            return a < b;
        };
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(per_quadrant), order.end(), better);

        const int rows = lattice.n_rows;
        const int cols = lattice.n_cols;
        std::vector<std::uint8_t> cells(static_cast<std::size_t>(rows) * cols, 0);
        auto set = [&](int r, int c)
        { cells[static_cast<std::size_t>(r) * cols + c] = 1; };
        for (std::size_t k = 0; k < per_quadrant; ++k)
        {
            const int r = static_cast<int>(order[k] / q_cols);
            const int c = static_cast<int>(order[k] % q_cols);
            set(r, c);
            set(r, cols - 1 - c);
            set(rows - 1 - r, c);
            set(rows - 1 - r, cols - 1 - c);
        }
        return ActivationMask(rows, cols, std::move(cells));
    }

    ArrayGeometry mask_to_geometry(const LatticeSpec &lattice, const ActivationMask &mask)
    {
        lattice.validate();
        if (mask.n_rows() != lattice.n_rows || mask.n_cols() != lattice.n_cols)
            throw std::invalid_argument("mask_to_geometry: mask shape does not match lattice");
        const double center_row = 0.5 * (lattice.n_rows - 1);
        const double center_col = 0.5 * (lattice.n_cols - 1);
        ArrayGeometry geom;
        geom.elements.reserve(static_cast<std::size_t>(mask.n_active()));
        for (int r = 0; r < lattice.n_rows; ++r)
            for (int c = 0; c < lattice.n_cols; ++c)
                if (mask.active(r, c))
                    geom.elements.push_back({(c - center_col) * lattice.d_y, (r - center_row) * lattice.d_z});
        return geom;
    }

    ArrayGeometry upa_geometry(int n_rows, int n_cols, double d_y, double d_z)
    {
        LatticeSpec lattice{n_rows, n_cols, d_y, d_z};
        lattice.validate();
        return mask_to_geometry(lattice,
                                ActivationMask(n_rows, n_cols, std::vector<std::uint8_t>(static_cast<std::size_t>(n_rows) * n_cols, 1)));
    }

    ActivationMap activation_probability_map(const LatticeSpec &lattice, const ProbabilityProfile &profile,
                                             int n_active, std::size_t n_samples, std::uint64_t seed,
                                             std::size_t threads)
    {
        if (n_samples < 1)
            throw std::invalid_argument("activation_probability_map: n_samples must be at least 1");
        lattice.validate();

        const std::size_t n_cells = static_cast<std::size_t>(lattice.n_rows) * lattice.n_cols;
        // Integer counts per chunk; summation order cannot change the result.
        const std::size_t n_chunks = std::min<std::size_t>(n_samples, 64);
        std::vector<std::vector<std::uint64_t>> partial(n_chunks);
        parallel_for(n_chunks, threads, [&](std::size_t chunk)
                     {
            auto &counts = partial[chunk];
            counts.assign(n_cells, 0);
            for (std::size_t i = chunk; i < n_samples; i += n_chunks)
            {
                const auto mask = generate_mask(lattice, profile, n_active, substream_seed(seed, i));
                const auto &cells = mask.cells();
                for (std::size_t k = 0; k < n_cells; ++k)
                    counts[k] += cells[k];
            } });

        ActivationMap map{lattice.n_rows, lattice.n_cols, n_samples, std::vector<std::uint64_t>(n_cells, 0)};
        for (const auto &counts : partial)
            for (std::size_t k = 0; k < n_cells; ++k)
                map.counts[k] += counts[k];
        return map;
    }

    void write_activation_csv(std::ostream &os, const ActivationMap &map)
    {
        os << "row,col,probability\n";
        char buf[32];
        for (int r = 0; r < map.n_rows; ++r)
            for (int c = 0; c < map.n_cols; ++c)
            {
                std::snprintf(buf, sizeof buf, "%.6f", map.probability(r, c));
                os << r << ',' << c << ',' << buf << '\n';
            }
    }

} // namespace thinarray::array
