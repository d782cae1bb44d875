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

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace thinarray::emu
{
    std::string_view target_name(Target t)
    {
        return t == Target::mean ? "mean" : "p5";
    }

    Target target_from_name(std::string_view name)
    {
        if (name == "mean")
            return Target::mean;
        if (name == "p5")
            return Target::p5;
        throw std::invalid_argument("unknown target '" + std::string(name) + "' (expected mean or p5)");
    }

    std::string_view kind_name(ModelKind k)
    {
        switch (k)
        {
        case ModelKind::ridge:
            return "ridge";
        case ModelKind::random_forest:
            return "random_forest";
        default:
            return "knn";
        }
    }

    ModelKind kind_from_name(std::string_view name)
    {
        if (name == "ridge")
            return ModelKind::ridge;
        if (name == "rf" || name == "random_forest")
            return ModelKind::random_forest;
        if (name == "knn")
            return ModelKind::knn;
        throw std::invalid_argument("unknown model kind '" + std::string(name) + "' (expected ridge, rf or knn)");
    }

    void Dataset::validate(const Bounds &bounds) const
    {
        std::set<std::tuple<std::uint64_t, double, double, double, double>> seen;
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            const auto &r = rows[i];
            validate_input(r.input, bounds);
            if (!seen.emplace(r.seed, r.input.d_y, r.input.d_z, r.input.alpha_y, r.input.alpha_z).second)
                throw std::invalid_argument("dataset row " + std::to_string(i) + " duplicates an earlier (seed, input) pair");
        }
    }

    FeatureMatrix Dataset::features() const
    {
        FeatureMatrix x(rows.size(), InputConfig::dimension);
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            const auto v = rows[i].input.to_array();
            std::copy(v.begin(), v.end(), x.row(i).begin());
        }
        return x;
    }

    std::vector<double> Dataset::targets(Target t) const
    {
        std::vector<double> y;
        y.reserve(rows.size());
        for (const auto &r : rows)
            y.push_back(r.target(t));
        return y;
    }

    Dataset Dataset::subset(std::span<const std::size_t> indices) const
    {
        Dataset out;
        out.rows.reserve(indices.size());
        for (std::size_t i : indices)
            out.rows.push_back(rows.at(i));
        return out;
    }

    EmulatorModel::EmulatorModel(Target target, Scaler scaler, Regressor regressor, std::size_t training_size,
                                 std::uint64_t seed)
        : target_(target), scaler_(std::move(scaler)), regressor_(std::move(regressor)),
          training_size_(training_size), seed_(seed)
    {
        if (scaler_.mean.size() != InputConfig::dimension || scaler_.stdev.size() != InputConfig::dimension)
            throw std::invalid_argument("EmulatorModel: scaler must have 4 features");
        for (double s : scaler_.stdev)
            if (!(s > 0.0))
                throw std::invalid_argument("EmulatorModel: scaler stdev must be positive");
    }

    ModelKind EmulatorModel::kind() const
    {
        return static_cast<ModelKind>(regressor_.index());
    }

    double EmulatorModel::predict(const InputConfig &input) const
    {
        validate_input(input);
        return predict_unchecked(input);
    }

    double EmulatorModel::predict_unchecked(const InputConfig &input) const
    {
        const auto raw = input.to_array();
        std::array<double, InputConfig::dimension> z{};
        scaler_.apply(raw, z);
        return std::visit([&](const auto &r)
                          { return r.predict(z); },
                          regressor_);
    }

    namespace
    {
        struct Prepared
        {
            Scaler scaler;
            FeatureMatrix x;
            std::vector<double> y;
        };

        Prepared prepare(const Dataset &data, Target target)
        {
            data.validate();
            const FeatureMatrix raw = data.features();
            Scaler scaler = Scaler::fit(raw);
            FeatureMatrix x = scaler.apply(raw);
            return {std::move(scaler), std::move(x), data.targets(target)};
        }
    }

    EmulatorModel train_ridge(const Dataset &data, double lambda, Target target)
    {
        auto p = prepare(data, target);
        auto reg = RidgeRegressor::fit(p.x, p.y, lambda);
        return EmulatorModel(target, std::move(p.scaler), std::move(reg), data.size(), 0);
    }

    EmulatorModel train_random_forest(const Dataset &data, const ForestParams &params, Target target,
                                      std::size_t threads)
    {
        auto p = prepare(data, target);
        auto forest = RandomForest::fit(p.x, p.y, params, threads);
        return EmulatorModel(target, std::move(p.scaler), std::move(forest), data.size(), params.seed);
    }

    EmulatorModel train_knn(const Dataset &data, int k, Target target)
    {
        auto p = prepare(data, target);
        auto knn = KnnRegressor::fit(p.x, p.y, k);
        return EmulatorModel(target, std::move(p.scaler), std::move(knn), data.size(), 0);
    }

    EmulatorModel train(const Dataset &data, const ModelSpec &spec, Target target, std::size_t threads)
    {
        switch (spec.kind)
        {
        case ModelKind::ridge:
            return train_ridge(data, spec.ridge_lambda, target);
        case ModelKind::random_forest:
            return train_random_forest(data, spec.forest, target, threads);
        default:
            return train_knn(data, spec.knn_k, target);
        }
    }

} // namespace thinarray::emu
