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

#include "thinarray/beam_model.hpp"

#include "thinarray/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace thinarray::beam
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void check_direction(Direction dir)
        {
            if (!(dir.theta >= 0.0 && dir.theta <= pi) || !(dir.phi > -pi && dir.phi <= pi))
                throw std::invalid_argument("direction out of range: theta in [0, pi], phi in (-pi, pi]");
        }
    }

    Direction Direction::from_vector(double dx, double dy, double dz)
    {
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (!(r > 0.0))
            throw std::invalid_argument("Direction::from_vector: zero-length vector");
        double phi = std::atan2(dy, dx);
        if (phi <= -pi)
            phi = pi;
        return {std::acos(std::clamp(dz / r, -1.0, 1.0)), phi};
    }

    double element_gain_db(Direction dir)
    {
        check_direction(dir);
        const double hpbw = half_power_beamwidth_deg * pi / 180.0;
        const double v = (dir.theta - pi / 2.0) / hpbw;
        const double h = dir.phi / hpbw;
        const double a_v = -std::min(12.0 * v * v, side_lobe_level_db);
        const double a_h = -std::min(12.0 * h * h, max_attenuation_db);
        return max_gain_dbi - std::min(-(a_v + a_h), max_attenuation_db);
    }

    ComplexVector steering_vector(const ArrayGeometry &geom, Direction dir)
    {
        if (geom.empty())
            throw std::invalid_argument("steering_vector: empty geometry");
        const double u = std::sin(dir.theta) * std::sin(dir.phi);
        const double v = std::cos(dir.theta);
        ComplexVector a;
        a.reserve(geom.size());
        for (const auto &e : geom.elements)
            a.push_back(std::polar(1.0, 2.0 * pi * (e.y * u + e.z * v)));
        return a;
    }

    BeamformingWeights conjugate_weights(const ArrayGeometry &geom, Direction target)
    {
        ComplexVector a = steering_vector(geom, target);
        double norm2 = 0.0;
        for (const auto &x : a)
            norm2 += std::norm(x);
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto &x : a)
            x = std::conj(x) * scale;
        return {std::move(a)};
    }

    std::complex<double> array_factor(const BeamformingWeights &w, const ComplexVector &steering)
    {
        if (w.weights.size() != steering.size())
            throw std::invalid_argument("array_factor: weight count does not match element count");
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t i = 0; i < steering.size(); ++i)
            sum += w.weights[i] * steering[i];
        return sum;
    }

    double array_gain_db(const ArrayGeometry &geom, const BeamformingWeights &w, Direction dir)
    {
        if (w.weights.size() != geom.size())
            throw std::invalid_argument("array_gain_db: weight count does not match element count");
        const double power = std::norm(array_factor(w, steering_vector(geom, dir)));
        return element_gain_db(dir) + 10.0 * std::log10(std::max(power, min_array_power));
    }

    void write_pattern_csv(std::ostream &os, const ArrayGeometry &geom, const BeamformingWeights &w,
                           std::span<const double> theta_deg, std::span<const double> phi_deg)
    {
        os << "theta_deg,phi_deg,gain_db\n";
        for (double t : theta_deg)
            for (double p : phi_deg)
            {
                const Direction dir{t * pi / 180.0, p * pi / 180.0};
                os << io::format_double(t) << ',' << io::format_double(p) << ','
                   << io::format_double(array_gain_db(geom, w, dir)) << '\n';
            }
    }

} // namespace thinarray::beam
