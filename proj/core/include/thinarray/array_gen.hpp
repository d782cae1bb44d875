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

#ifndef THINARRAY_ARRAY_GEN_HPP
#define THINARRAY_ARRAY_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Randomized thinning of a rectangular lattice.
//
// Rows run along z (vertical, row 0 = top), columns along y (horizontal).
// Distances from the lattice center are physical, in wavelengths:
//   delta_y = |c - (n_cols - 1) / 2| * d_y,  delta_z = |r - (n_rows - 1) / 2| * d_z.
//
// Mask generation works on the top-left quadrant only (rows < n_rows / 2,
// cols < n_cols / 2, so the center row / column of an odd dimension is never
// eligible). Each quadrant cell draws u ~ U(0, 1) in row-major order and gets
// the score log(u) - alpha_y * delta_y - alpha_z * delta_z. The n_active / 4
// best-scoring cells (ties: lower row-major index first) are switched on and
// mirrored left-right, top-bottom and diagonally.

namespace thinarray::array
{
    struct LatticeSpec
    {
        int n_rows = 100; // z direction
        int n_cols = 99;  // y direction
        double d_y = 0.5; // wavelengths
        double d_z = 0.5; // wavelengths

        // Throws std::invalid_argument on non-positive sizes or spacings.
        void validate() const;

        // Cells eligible for selection in one quadrant.
        std::size_t quadrant_cells() const;
    };

    struct ProbabilityProfile
    {
        double alpha_y = 0.0; // decay per wavelength along y
        double alpha_z = 0.0; // decay per wavelength along z
    };

    // Natural log of f(delta_y, delta_z) = exp(-alpha_y delta_y) exp(-alpha_z delta_z).
    inline double log_profile_value(const ProbabilityProfile &profile, double delta_y, double delta_z)
    {
        return -profile.alpha_y * delta_y - profile.alpha_z * delta_z;
    }

    // Boolean grid, row-major. Always holds at least one active cell and is
    // symmetric under left-right and top-bottom mirroring.
    class ActivationMask
    {
    public:
        // Throws std::invalid_argument if the shape is inconsistent, no cell
        // is active, or either mirror symmetry is violated.
        ActivationMask(int n_rows, int n_cols, std::vector<std::uint8_t> cells);

        int n_rows() const { return n_rows_; }
        int n_cols() const { return n_cols_; }
        int n_active() const { return n_active_; }
        bool active(int row, int col) const { return cells_[static_cast<std::size_t>(row) * n_cols_ + col] != 0; }
        const std::vector<std::uint8_t> &cells() const { return cells_; }

        // One line per lattice row ('0' / '1'), row 0 first, '\n' terminated.
        std::string to_text() const;
        static ActivationMask from_text(std::string_view text);

        bool operator==(const ActivationMask &) const = default;

    private:
        int n_rows_;
        int n_cols_;
        int n_active_;
        std::vector<std::uint8_t> cells_;
    };

    struct Element
    {
        double y; // wavelengths
        double z; // wavelengths

        bool operator==(const Element &) const = default;
    };

    // Element positions in wavelengths, centered on the lattice centroid.
    struct ArrayGeometry
    {
        std::vector<Element> elements;

        std::size_t size() const { return elements.size(); }
        bool empty() const { return elements.empty(); }
    };

    // Throws std::invalid_argument when n_active is not a positive multiple
    // of 4 or n_active / 4 exceeds LatticeSpec::quadrant_cells().
    ActivationMask generate_mask(const LatticeSpec &lattice, const ProbabilityProfile &profile,
                                 int n_active, std::uint64_t seed);

    // Cell (r, c) -> y = (c - (n_cols - 1) / 2) d_y, z = (r - (n_rows - 1) / 2) d_z,
    // in row-major cell order. Throws std::invalid_argument on shape mismatch.
    ArrayGeometry mask_to_geometry(const LatticeSpec &lattice, const ActivationMask &mask);

    // Fully populated n_rows x n_cols grid, centered at the origin.
    ArrayGeometry upa_geometry(int n_rows, int n_cols, double d_y, double d_z);

    struct ActivationMap
    {
        int n_rows = 0;
        int n_cols = 0;
        std::size_t n_samples = 0;
        std::vector<std::uint64_t> counts; // row-major

        double probability(int row, int col) const
        {
            return static_cast<double>(counts[static_cast<std::size_t>(row) * n_cols + col]) / static_cast<double>(n_samples);
        }
    };

    // Per-cell activation frequency over n_samples masks. Sample i uses seed
    // substream_seed(seed, i), so the result does not depend on `threads`.
    ActivationMap activation_probability_map(const LatticeSpec &lattice, const ProbabilityProfile &profile,
                                             int n_active, std::size_t n_samples, std::uint64_t seed,
                                             std::size_t threads = 1);

    // CSV: header `row,col,probability`, probabilities with 6 decimals.
    void write_activation_csv(std::ostream &os, const ActivationMap &map);

} // namespace thinarray::array

#endif
