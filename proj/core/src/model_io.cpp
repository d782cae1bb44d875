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

#include "thinarray/emulator.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace thinarray::emu
{
    using nlohmann::json;

    namespace
    {
        json tree_to_json(const RegressionTree &tree)
        {
            json feature = json::array(), threshold = json::array(), left = json::array(), right = json::array(),
                 value = json::array();
            for (const auto &n : tree.nodes)
            {
                feature.push_back(n.feature);
                threshold.push_back(n.threshold);
                left.push_back(n.left);
                right.push_back(n.right);
                value.push_back(n.value);
            }
            return {{"feature", feature}, {"threshold", threshold}, {"left", left}, {"right", right}, {"value", value}};
        }

        RegressionTree tree_from_json(const json &j)
        {
            const auto feature = j.at("feature").get<std::vector<int>>();
            const auto threshold = j.at("threshold").get<std::vector<double>>();
            const auto left = j.at("left").get<std::vector<int>>();
            const auto right = j.at("right").get<std::vector<int>>();
            const auto value = j.at("value").get<std::vector<double>>();
            const std::size_t n = feature.size();
            if (n == 0 || threshold.size() != n || left.size() != n || right.size() != n || value.size() != n)
                throw std::invalid_argument("model: inconsistent tree arrays");
            RegressionTree tree;
            tree.nodes.resize(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                auto &node = tree.nodes[i];
                node = {feature[i], threshold[i], left[i], right[i], value[i]};
                if (node.feature >= static_cast<int>(InputConfig::dimension))
                    throw std::invalid_argument("model: tree feature index out of range");
                // Children always follow their parent, which rules out cycles.
                if (node.feature >= 0 && (node.left <= static_cast<int>(i) || node.right <= static_cast<int>(i) ||
                                          node.left >= static_cast<int>(n) || node.right >= static_cast<int>(n)))
                    throw std::invalid_argument("model: invalid tree child index");
            }
            return tree;
        }
    }

    std::string EmulatorModel::to_json(std::string_view manifest_ref) const
    {
        json params;
        if (const auto *r = std::get_if<RidgeRegressor>(&regressor_))
        {
            params = {{"weights", r->weights}, {"intercept", r->intercept}};
        }
        else if (const auto *f = std::get_if<RandomForest>(&regressor_))
        {
            json trees = json::array();
            for (const auto &t : f->trees)
                trees.push_back(tree_to_json(t));
            params = {{"trees", trees}};
        }
        else
        {
            const auto &k = std::get<KnnRegressor>(regressor_);
            json rows = json::array();
            for (std::size_t i = 0; i < k.x.rows(); ++i)
                rows.push_back(std::vector<double>(k.x.row(i).begin(), k.x.row(i).end()));
            params = {{"k", k.k}, {"x", rows}, {"y", k.y}};
        }

        json doc = {
            {"format_version", format_version},
            {"kind", kind_name(kind())},
            {"target", target_name(target_)},
            {"scaler", {{"mean", scaler_.mean}, {"stdev", scaler_.stdev}}},
            {"params", params},
            {"metadata", {{"training_size", training_size_}, {"seed", seed_}}},
        };
        if (!manifest_ref.empty())
            doc["manifest"] = manifest_ref;
        return doc.dump(1) + "\n";
    }

    EmulatorModel EmulatorModel::from_json(std::string_view text)
    {
        try
        {
            const json doc = json::parse(text);
            if (!doc.contains("format_version"))
                throw std::invalid_argument("model: missing format_version");
            const int version = doc.at("format_version").get<int>();
            if (version != format_version)
                throw std::invalid_argument("model: unsupported format_version " + std::to_string(version));

            const ModelKind kind = kind_from_name(doc.at("kind").get<std::string>());
            const Target target = target_from_name(doc.at("target").get<std::string>());
            Scaler scaler{doc.at("scaler").at("mean").get<std::vector<double>>(),
                          doc.at("scaler").at("stdev").get<std::vector<double>>()};
            const json &params = doc.at("params");

            Regressor regressor;
            switch (kind)
            {
            case ModelKind::ridge:
            {
                RidgeRegressor r{params.at("weights").get<std::vector<double>>(), params.at("intercept").get<double>()};
                if (r.weights.size() != InputConfig::dimension)
                    throw std::invalid_argument("model: ridge weight count must be 4");
                regressor = std::move(r);
                break;
            }
            case ModelKind::random_forest:
            {
                RandomForest f;
                for (const auto &t : params.at("trees"))
                    f.trees.push_back(tree_from_json(t));
                if (f.trees.empty())
                    throw std::invalid_argument("model: forest without trees");
                regressor = std::move(f);
                break;
            }
            case ModelKind::knn:
            {
                const auto rows = params.at("x").get<std::vector<std::vector<double>>>();
                std::vector<double> flat;
                for (const auto &r : rows)
                {
                    if (r.size() != InputConfig::dimension)
                        throw std::invalid_argument("model: knn rows must have 4 features");
                    flat.insert(flat.end(), r.begin(), r.end());
                }
                FeatureMatrix x(rows.size(), InputConfig::dimension, std::move(flat));
                regressor = KnnRegressor::fit(x, params.at("y").get<std::vector<double>>(), params.at("k").get<int>());
                break;
            }
            }
            const json &meta = doc.at("metadata");
            return EmulatorModel(target, std::move(scaler), std::move(regressor),
                                 meta.at("training_size").get<std::size_t>(), meta.at("seed").get<std::uint64_t>());
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument(std::string("model: malformed document: ") + e.what());
        }
    }

} // namespace thinarray::emu
