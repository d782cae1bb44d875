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

#ifndef THINARRAY_EMULATOR_HPP
#define THINARRAY_EMULATOR_HPP

#include "thinarray/input_config.hpp"
#include "thinarray/learners.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace thinarray::emu
{
    // Which simulator statistic a model predicts.
    enum class Target
    {
        mean,
        p5,
    };

    std::string_view target_name(Target t);
    Target target_from_name(std::string_view name);

    struct DatasetRow
    {
        std::uint64_t seed = 0;
        std::int64_t n_iter = 0;
        InputConfig input;
        double sinr_mean_db = 0.0;
        double sinr_p5_db = 0.0;

        double target(Target t) const { return t == Target::mean ? sinr_mean_db : sinr_p5_db; }
    };

    struct Dataset
    {
        std::vector<DatasetRow> rows;

        // Throws std::invalid_argument if an input is out of bounds or a
        // (seed, input) pair repeats.
        void validate(const Bounds &bounds = {}) const;

        std::size_t size() const { return rows.size(); }
        FeatureMatrix features() const;
        std::vector<double> targets(Target t) const;
        Dataset subset(std::span<const std::size_t> indices) const;
    };

    enum class ModelKind
    {
        ridge,
        random_forest,
        knn,
    };

    std::string_view kind_name(ModelKind k);
    // Accepts "ridge", "rf" / "random_forest", "knn".
    ModelKind kind_from_name(std::string_view name);

    struct ModelSpec
    {
        ModelKind kind = ModelKind::random_forest;
        double ridge_lambda = 1.0;
        ForestParams forest{};
        int knn_k = 5;
    };

    // A trained single-output regressor over standardized InputConfig features.
    class EmulatorModel
    {
    public:
        using Regressor = std::variant<RidgeRegressor, RandomForest, KnnRegressor>;

        EmulatorModel(Target target, Scaler scaler, Regressor regressor, std::size_t training_size, std::uint64_t seed);

        ModelKind kind() const;
        Target target() const { return target_; }
        const Scaler &scaler() const { return scaler_; }
        const Regressor &regressor() const { return regressor_; }
        std::size_t training_size() const { return training_size_; }
        std::uint64_t seed() const { return seed_; }

        // Throws std::invalid_argument for inputs outside the default bounds.
        double predict(const InputConfig &input) const;
        // No bounds check; used on hot paths whose inputs are known to be valid.
        double predict_unchecked(const InputConfig &input) const;

        // Self-describing JSON document with a mandatory format_version.
        std::string to_json(std::string_view manifest_ref = {}) const;
        // Throws std::invalid_argument on malformed documents or an unknown version.
        static EmulatorModel from_json(std::string_view text);

        static constexpr int format_version = 1;

    private:
        Target target_;
        Scaler scaler_;
        Regressor regressor_;
        std::size_t training_size_;
        std::uint64_t seed_;
    };

    EmulatorModel train_ridge(const Dataset &data, double lambda, Target target);
    EmulatorModel train_random_forest(const Dataset &data, const ForestParams &params, Target target,
                                      std::size_t threads = 1);
    EmulatorModel train_knn(const Dataset &data, int k, Target target);
    EmulatorModel train(const Dataset &data, const ModelSpec &spec, Target target, std::size_t threads = 1);

    // The (mean, p5) pair the optimizer works with.
    struct EmulatorPair
    {
        EmulatorModel mean;
        EmulatorModel p5;

        std::pair<double, double> predict(const InputConfig &input) const
        {
            return {mean.predict(input), p5.predict(input)};
        }
    };

    struct CvCell
    {
        std::size_t training_size;
        Target target;
        double nrmse_mean;
        double nrmse_std; // sample standard deviation across folds
    };

    struct CvReport
    {
        int folds = 0;
        std::vector<CvCell> cells; // ordered by size, then target

        const CvCell &at(std::size_t size, Target target) const;
    };

    // Shuffles [0, n) with Rng(seed) (Fisher-Yates) and cuts it into `folds`
    // contiguous blocks whose sizes differ by at most one.
    std::vector<std::vector<std::size_t>> fold_partition(std::size_t n, int folds, std::uint64_t seed);

    // For each size and fold: train on the first `size` rows (in shuffled
    // order) of the other folds, score nRMSE on the held-out fold, for both
    // targets. Sizes must be strictly increasing and at most the smallest
    // training-fold union.
    CvReport cross_validate(const Dataset &data, const ModelSpec &spec, int folds,
                            std::span<const std::size_t> training_sizes, std::uint64_t seed,
                            std::size_t threads = 1,
                            std::vector<Target> targets = {Target::mean, Target::p5});

} // namespace thinarray::emu

#endif
