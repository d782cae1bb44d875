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

#ifndef THINARRAY_LEARNERS_HPP
#define THINARRAY_LEARNERS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Regressors over an arbitrary number of real features. The emulator wraps
// these with the four-parameter design space; tests use them directly.

namespace thinarray::emu
{
    // Dense row-major matrix, one sample per row.
    class FeatureMatrix
    {
    public:
        FeatureMatrix() = default;
        FeatureMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
        FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
        std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
        double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
        double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const std::vector<double> &data() const { return data_; }

        FeatureMatrix select_rows(std::span<const std::size_t> indices) const;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<double> data_;
    };

    // sqrt(mean(((y - y_hat) / y)^2)). Throws std::invalid_argument on
    // length mismatch or empty input and std::domain_error if any
    // |y_i| < nrmse_epsilon.
    inline constexpr double nrmse_epsilon = 1e-6;
    double nrmse(std::span<const double> y, std::span<const double> y_hat);

    // Per-feature standardization with the population standard deviation.
    struct Scaler
    {
        std::vector<double> mean;
        std::vector<double> stdev;

        // Throws std::invalid_argument for fewer than 2 rows or a constant feature.
        static Scaler fit(const FeatureMatrix &x);
        void apply(std::span<const double> in, std::span<double> out) const;
        FeatureMatrix apply(const FeatureMatrix &x) const;
    };

    // y = intercept + w . x on (already standardized, zero-mean) features.
    struct RidgeRegressor
    {
        std::vector<double> weights;
        double intercept = 0.0;

        // Closed-form minimizer of |X w + b - y|^2 + lambda |w|^2 with the
        // intercept left unpenalized. Requires rows > cols; with lambda = 0 a
        // singular normal matrix throws std::invalid_argument.
        static RidgeRegressor fit(const FeatureMatrix &x, std::span<const double> y, double lambda);
        double predict(std::span<const double> features) const;
    };

    struct TreeNode
    {
        int feature = -1; // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;  // x[feature] <= threshold
        int right = -1; // x[feature] >  threshold
        double value = 0.0;
    };

    // CART regression tree grown by greedy variance reduction until nodes are
    // pure or cannot be split with at least min_leaf samples per child.
    struct RegressionTree
    {
        std::vector<TreeNode> nodes;

        static RegressionTree fit(const FeatureMatrix &x, std::span<const double> y,
                                  std::span<const std::size_t> sample, std::size_t min_leaf);
        double predict(std::span<const double> features) const;
    };

    struct ForestParams
    {
        int n_trees = 200;
        int min_leaf = 2;
        bool bootstrap = true;
        std::uint64_t seed = 0;
    };

    struct RandomForest
    {
        std::vector<RegressionTree> trees;

        // Tree t resamples with Rng(substream_seed(seed, t)); trees are
        // independent, so `threads` never changes the result.
        static RandomForest fit(const FeatureMatrix &x, std::span<const double> y, const ForestParams &params,
                                std::size_t threads = 1);
        double predict(std::span<const double> features) const;
    };

    // Inverse-distance weighted mean of the k nearest training rows. Rows at
    // distance 0 short-circuit to their (mean) target.
    struct KnnRegressor
    {
        FeatureMatrix x;
        std::vector<double> y;
        int k = 5;

        static KnnRegressor fit(const FeatureMatrix &x, std::span<const double> y, int k);
        double predict(std::span<const double> features) const;
    };

} // namespace thinarray::emu

#endif
