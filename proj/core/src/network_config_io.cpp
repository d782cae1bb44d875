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

#include "thinarray/net_sim.hpp"

#include <json.hpp>

namespace thinarray::net
{
    using nlohmann::json;

    namespace
    {
        double number(const json &v, const std::string &key)
        {
            if (!v.is_number())
                throw ConfigError(key, "expected a number");
            return v.get<double>();
        }

        std::string_view los_mode_name(LosMode m)
        {
            switch (m)
            {
            case LosMode::always_los:
                return "los";
            case LosMode::always_nlos:
                return "nlos";
            default:
                return "stochastic";
            }
        }
    }

    NetworkConfig parse_network_config(std::string_view json_text)
    {
        json doc;
        try
        {
            doc = json::parse(json_text);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError("<document>", std::string("not valid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw ConfigError("<document>", "top level must be an object");

        NetworkConfig cfg;
        for (const auto &[key, v] : doc.items())
        {
            if (key == "carrier_freq_ghz")
                cfg.carrier_freq_ghz = number(v, key);
            else if (key == "bandwidth_mhz")
                cfg.bandwidth_mhz = number(v, key);
            else if (key == "tx_power_dbm")
                cfg.tx_power_dbm = number(v, key);
            else if (key == "ue_noise_figure_db")
                cfg.ue_noise_figure_db = number(v, key);
            else if (key == "n_sites")
            {
                if (!v.is_number_integer())
                    throw ConfigError(key, "expected an integer");
                cfg.n_sites = v.get<int>();
            }
            else if (key == "isd_m")
                cfg.isd_m = number(v, key);
            else if (key == "bs_height_m")
                cfg.bs_height_m = number(v, key);
            else if (key == "ue_height_m")
                cfg.ue_height_m = number(v, key);
            else if (key == "shadowing_sigma_los_db")
                cfg.shadowing_sigma_los_db = number(v, key);
            else if (key == "shadowing_sigma_nlos_db")
                cfg.shadowing_sigma_nlos_db = number(v, key);
            else if (key == "min_2d_distance_m")
                cfg.min_2d_distance_m = number(v, key);
            else if (key == "shadowing_enabled")
            {
                if (!v.is_boolean())
                    throw ConfigError(key, "expected true or false");
                cfg.shadowing_enabled = v.get<bool>();
            }
            else if (key == "los_mode")
            {
                const std::string mode = v.is_string() ? v.get<std::string>() : "";
                if (mode == "stochastic")
                    cfg.los_mode = LosMode::stochastic;
                else if (mode == "los")
                    cfg.los_mode = LosMode::always_los;
                else if (mode == "nlos")
                    cfg.los_mode = LosMode::always_nlos;
                else
                    throw ConfigError(key, "expected \"stochastic\", \"los\" or \"nlos\"");
            }
            else
                throw ConfigError(key, "unknown key");
        }
        cfg.validate();
        return cfg;
    }

    std::string network_config_to_json(const NetworkConfig &cfg)
    {
        const json doc = {
            {"carrier_freq_ghz", cfg.carrier_freq_ghz},
            {"bandwidth_mhz", cfg.bandwidth_mhz},
            {"tx_power_dbm", cfg.tx_power_dbm},
            {"ue_noise_figure_db", cfg.ue_noise_figure_db},
            {"n_sites", cfg.n_sites},
            {"isd_m", cfg.isd_m},
            {"bs_height_m", cfg.bs_height_m},
            {"ue_height_m", cfg.ue_height_m},
            {"shadowing_sigma_los_db", cfg.shadowing_sigma_los_db},
            {"shadowing_sigma_nlos_db", cfg.shadowing_sigma_nlos_db},
            {"min_2d_distance_m", cfg.min_2d_distance_m},
            {"shadowing_enabled", cfg.shadowing_enabled},
            {"los_mode", los_mode_name(cfg.los_mode)},
        };
        return doc.dump(2) + "\n";
    }

} // namespace thinarray::net
