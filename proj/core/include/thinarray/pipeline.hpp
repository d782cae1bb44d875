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

#ifndef THINARRAY_PIPELINE_HPP
#define THINARRAY_PIPELINE_HPP

#include "thinarray/emulator.hpp"
#include "thinarray/net_sim.hpp"

#include <cstddef>
#include <cstdint>

namespace thinarray
{
    // Simulates n_configs design points drawn uniformly from `bounds`.
    // Configuration j draws its input and then its simulation seed from
    // Rng(substream_seed(seed, j)); configurations run in parallel but every
    // row depends only on (j, seed), so `threads` never changes the output.
    emu::Dataset generate_dataset(const net::NetworkConfig &cfg, const net::ThinningSetup &setup,
                                  std::size_t n_configs, std::size_t n_iter, std::uint64_t seed,
                                  std::size_t threads = 1, const Bounds &bounds = {});

} // namespace thinarray

#endif
