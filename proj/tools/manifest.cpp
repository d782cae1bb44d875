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

#include "manifest.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace thinarray::cli
{
    std::string RunManifest::to_json() const
    {
        const nlohmann::json doc = {
            {"tool", "thinarray"},
            {"tool_version", tool_version},
            {"command", command},
            {"arguments", arguments},
            {"seed", seed},
            {"config_digest", config_digest},
            {"started_utc", started_utc},
            {"finished_utc", finished_utc},
            {"outputs", outputs},
        };
        return doc.dump(2) + "\n";
    }

    std::string sha256_hex(std::string_view data)
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256 digest failed");
        static constexpr char hex[] = "0123456789abcdef";
        std::string out;
        out.reserve(2 * length);
        for (unsigned int i = 0; i < length; ++i)
        {
            out.push_back(hex[digest[i] >> 4]);
            out.push_back(hex[digest[i] & 0xF]);
        }
        return out;
    }

    std::string utc_now_iso8601()
    {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::filesystem::path manifest_path_for(const std::filesystem::path &output)
    {
        return std::filesystem::path(output.string() + ".manifest.json");
    }

} // namespace thinarray::cli
