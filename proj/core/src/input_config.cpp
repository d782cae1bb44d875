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

#include "thinarray/input_config.hpp"

#include "thinarray/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thinarray
{
    namespace
    {
        constexpr std::array<std::string_view, InputConfig::dimension> axis_names{"d_y", "d_z", "alpha_y", "alpha_z"};

        void check_axis(std::size_t axis)
        {
            if (axis >= InputConfig::dimension)
                throw std::invalid_argument("axis index " + std::to_string(axis) + " out of range [0, 3]");
        }
    }

    double &InputConfig::operator[](std::size_t axis)
    {
        check_axis(axis);
        switch (axis)
        {
        case 0:
            return d_y;
        case 1:
            return d_z;
        case 2:
            return alpha_y;
        default:
            return alpha_z;
        }
    }

    double InputConfig::operator[](std::size_t axis) const
    {
        return const_cast<InputConfig &>(*this)[axis];
    }

    std::string_view axis_name(std::size_t axis)
    {
        check_axis(axis);
        return axis_names[axis];
    }

    std::size_t axis_from_name(std::string_view name)
    {
        for (std::size_t i = 0; i < axis_names.size(); ++i)
            if (axis_names[i] == name)
                return i;
        throw std::invalid_argument("unknown parameter axis '" + std::string(name) + "' (expected d_y, d_z, alpha_y or alpha_z)");
    }

    void Bounds::validate() const
    {
        for (std::size_t i = 0; i < axes.size(); ++i)
        {
            const auto &a = axes[i];
            if (!std::isfinite(a.low) || !std::isfinite(a.high) || !(a.low < a.high))
                throw std::invalid_argument("degenerate bounds on " + std::string(axis_name(i)) + ": low must be < high");
        }
    }

    bool Bounds::contains(const InputConfig &x) const
    {
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (!axes[i].contains(x[i]))
                return false;
        return true;
    }

    InputConfig Bounds::clamp(InputConfig x) const
    {
        for (std::size_t i = 0; i < axes.size(); ++i)
            x[i] = std::clamp(x[i], axes[i].low, axes[i].high);
        return x;
    }

    double Bounds::diagonal() const
    {
        double sum = 0.0;
        for (const auto &a : axes)
            sum += a.width() * a.width();
        return std::sqrt(sum);
    }

    InputConfig Bounds::sample(Rng &rng) const
    {
        InputConfig x;
        for (std::size_t i = 0; i < axes.size(); ++i)
            x[i] = rng.uniform(axes[i].low, axes[i].high);
        return x;
    }

    void validate_input(const InputConfig &x, const Bounds &bounds)
    {
        for (std::size_t i = 0; i < InputConfig::dimension; ++i)
        {
            const double v = x[i];
            const auto &a = bounds.axes[i];
            if (!std::isfinite(v) || v < a.low || v > a.high)
                throw std::invalid_argument("input " + std::string(axis_name(i)) + " = " + std::to_string(v) +
                                            " outside [" + std::to_string(a.low) + ", " + std::to_string(a.high) + "]");
        }
    }

} // namespace thinarray
