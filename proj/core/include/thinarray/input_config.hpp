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

#ifndef THINARRAY_INPUT_CONFIG_HPP
#define THINARRAY_INPUT_CONFIG_HPP

#include <array>
#include <cstddef>
#include <string_view>

namespace thinarray
{
    class Rng;

    // A point of the four-dimensional design space: lattice spacings (in
    // wavelengths) and the exponential decay rates of the probability
    // profile (per wavelength).
    struct InputConfig
    {
        double d_y = 0.5;
        double d_z = 0.5;
        double alpha_y = 0.0;
        double alpha_z = 0.0;

        static constexpr std::size_t dimension = 4;

        // Order: d_y, d_z, alpha_y, alpha_z.
        std::array<double, dimension> to_array() const { return {d_y, d_z, alpha_y, alpha_z}; }
        static InputConfig from_array(const std::array<double, dimension> &v) { return {v[0], v[1], v[2], v[3]}; }

        double &operator[](std::size_t axis);
        double operator[](std::size_t axis) const;

        bool operator==(const InputConfig &) const = default;
    };

    std::string_view axis_name(std::size_t axis);

    // Throws std::invalid_argument on an unknown name.
    std::size_t axis_from_name(std::string_view name);

    struct Interval
    {
        double low;
        double high;

        double width() const { return high - low; }
        bool contains(double x) const { return x >= low && x <= high; }
    };

    // Per-parameter box. Defaults: d in [0.3, 1.0] wavelengths, alpha in [-1, 10].
    struct Bounds
    {
        std::array<Interval, InputConfig::dimension> axes{
            Interval{0.3, 1.0}, Interval{0.3, 1.0}, Interval{-1.0, 10.0}, Interval{-1.0, 10.0}};

        // Throws std::invalid_argument unless low < high (both finite) on every axis.
        void validate() const;
        bool contains(const InputConfig &x) const;
        InputConfig clamp(InputConfig x) const;
        double diagonal() const;

        // Uniform draw, one variate per axis in axis order.
        InputConfig sample(Rng &rng) const;
    };

    // Throws std::invalid_argument naming the offending field when `x` lies
    // outside `bounds` or is not finite.
    void validate_input(const InputConfig &x, const Bounds &bounds = {});

} // namespace thinarray

#endif
