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

#ifndef THINARRAY_TOOLS_MANIFEST_HPP
#define THINARRAY_TOOLS_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace thinarray::cli
{
    // Reproducibility record written next to every output as
    // <output>.manifest.json.
    struct RunManifest
    {
        std::string tool_version;
        std::string command;
        std::vector<std::string> arguments;
        std::uint64_t seed = 0;
        std::string config_digest; // "sha256:<hex>" of the config bytes
        std::string started_utc;
        std::string finished_utc;
        std::vector<std::string> outputs;

        std::string to_json() const;
    };

    std::string sha256_hex(std::string_view data);
    std::string utc_now_iso8601();
    std::filesystem::path manifest_path_for(const std::filesystem::path &output);

} // namespace thinarray::cli

#endif
