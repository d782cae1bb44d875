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

#ifndef THINARRAY_BEAM_MODEL_HPP
#define THINARRAY_BEAM_MODEL_HPP

#include "thinarray/array_gen.hpp"

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

namespace thinarray::beam
{
    using array::ArrayGeometry;
    using ComplexVector = std::vector<std::complex<double>>;

    // theta: zenith angle from +z, in [0, pi]. phi: azimuth in the horizontal
    // plane measured from panel boresight (+x), in (-pi, pi].
    struct Direction
    {
        double theta;
        double phi;

        // Direction of the vector (dx, dy, dz) in the panel frame.
        static Direction from_vector(double dx, double dy, double dz);
    };

    inline constexpr double max_gain_dbi = 8.0;
    inline constexpr double max_attenuation_db = 30.0;
    inline constexpr double side_lobe_level_db = 30.0;
    inline constexpr double half_power_beamwidth_deg = 65.0;

    // Parametric element pattern: vertical and horizontal parabolic cuts with
    // 65 degree half-power beamwidth, 30 dB floors and 8 dBi peak gain.
    double element_gain_db(Direction dir);

    // a_i = exp(j 2 pi (y_i sin(theta) sin(phi) + z_i cos(theta))), positions in wavelengths.
    ComplexVector steering_vector(const ArrayGeometry &geom, Direction dir);

    struct BeamformingWeights
    {
        ComplexVector weights; // unit Euclidean norm
    };

    // w = conj(a(target)) / |a(target)|. Together with array_factor() this
    // gives |AF(target)|^2 = N.
    BeamformingWeights conjugate_weights(const ArrayGeometry &geom, Direction target);

    // AF = sum_i w_i a_i(dir).
    std::complex<double> array_factor(const BeamformingWeights &w, const ComplexVector &steering);

    inline constexpr double min_array_power = 1e-30;

    // element_gain_db(dir) + 10 log10(max(|AF(dir)|^2, 1e-30)).
    double array_gain_db(const ArrayGeometry &geom, const BeamformingWeights &w, Direction dir);

    // CSV `theta_deg,phi_deg,gain_db` over the Cartesian product of the grids
    // (theta outer loop).
    void write_pattern_csv(std::ostream &os, const ArrayGeometry &geom, const BeamformingWeights &w,
                           std::span<const double> theta_deg, std::span<const double> phi_deg);

} // namespace thinarray::beam

#endif
