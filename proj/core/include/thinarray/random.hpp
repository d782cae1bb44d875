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

#ifndef THINARRAY_RANDOM_HPP
#define THINARRAY_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace thinarray
{
    // SplitMix64 output function (64-bit avalanche mixer).
    constexpr std::uint64_t mix64(std::uint64_t x) noexcept
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // Seed of substream `index` derived from `master`.
    // Equal to mix64(mix64(master) + index * golden ratio), i.e. the index-th
    // output of a SplitMix64 sequence whose state starts at mix64(master).
    // Used everywhere work is split into independent pieces (iterations,
    // samples, trees, configurations) so results never depend on scheduling.
    constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) noexcept
    {
        return mix64(mix64(master) + index * 0x9E3779B97F4A7C15ULL);
    }

    // Seeded pseudo-random stream. Variates are derived from the raw
    // std::mt19937_64 output here rather than through <random> distributions.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next_u64() { return engine_(); }

        // Uniform on the open interval (0, 1); never returns 0, so log() is safe.
        double uniform()
        {
            return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
        }

        double uniform(double low, double high) { return low + (high - low) * uniform(); }

        // Uniform integer in [0, n). n must be positive.
        std::size_t index_below(std::size_t n);

        // Standard normal variate (Box-Muller, one output per two uniforms).
        double normal();

    private:
        std::mt19937_64 engine_;
    };

} // namespace thinarray

#endif
