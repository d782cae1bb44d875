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

#include "thinarray/learners.hpp"

#include "thinarray/parallel.hpp"
#include "thinarray/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace thinarray::emu
{
    FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows * cols)
            throw std::invalid_argument("FeatureMatrix: data size does not match shape");
    }

    FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> indices) const
    {
        FeatureMatrix out(indices.size(), cols_);
        for (std::size_t i = 0; i < indices.size(); ++i)
            std::copy_n(row(indices[i]).begin(), cols_, out.row(i).begin());
        return out;
    }

    double nrmse(std::span<const double> y, std::span<const double> y_hat)
    {
        if (y.size() != y_hat.size())
            throw std::invalid_argument("nrmse: length mismatch");
        if (y.empty())
            throw std::invalid_argument("nrmse: empty input");
        double sum = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i)
        {
            if (!(std::abs(y[i]) >= nrmse_epsilon))
                throw std::domain_error("nrmse: reference value " + std::to_string(y[i]) + " at index " +
                                        std::to_string(i) + " is too close to zero for relative error");
            const double rel = (y[i] - y_hat[i]) / y[i];
            sum += rel * rel;
        }
        return std::sqrt(sum / static_cast<double>(y.size()));
    }

    Scaler Scaler::fit(const FeatureMatrix &x)
    {
        if (x.rows() < 2)
            throw std::invalid_argument("Scaler::fit: need at least 2 rows");
        Scaler s;
        s.mean.assign(x.cols(), 0.0);
        s.stdev.assign(x.cols(), 0.0);
        const auto n = static_cast<double>(x.rows());
        for (std::size_t j = 0; j < x.cols(); ++j)
        {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.rows(); ++i)
                sum += x(i, j);
            const double m = sum / n;
            double ss = 0.0;
            for (std::size_t i = 0; i < x.rows(); ++i)
                ss += (x(i, j) - m) * (x(i, j) - m);
            const double sd = std::sqrt(ss / n);
            if (!(sd > 0.0))
                throw std::invalid_argument("Scaler::fit: feature " + std::to_string(j) + " is constant");
            s.mean[j] = m;
            s.stdev[j] = sd;
        }
        return s;
    }

    void Scaler::apply(std::span<const double> in, std::span<double> out) const
    {
        if (in.size() != mean.size() || out.size() != mean.size())
            throw std::invalid_argument("Scaler::apply: feature count mismatch");
        for (std::size_t j = 0; j < in.size(); ++j)
            out[j] = (in[j] - mean[j]) / stdev[j];
    }

    FeatureMatrix Scaler::apply(const FeatureMatrix &x) const
    {
        FeatureMatrix out(x.rows(), x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            apply(x.row(i), out.row(i));
        return out;
    }

    RidgeRegressor RidgeRegressor::fit(const FeatureMatrix &x, std::span<const double> y, double lambda)
    {
        const std::size_t n = x.rows();
        const std::size_t p = x.cols();
        if (y.size() != n)
            throw std::invalid_argument("RidgeRegressor::fit: target count does not match rows");
        if (n <= p)
            throw std::invalid_argument("RidgeRegressor::fit: need more rows than features");
        if (!(lambda >= 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("RidgeRegressor::fit: lambda must be finite and >= 0");

        Eigen::MatrixXd xm(n, p);
        Eigen::VectorXd yv(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            for (std::size_t j = 0; j < p; ++j)
                xm(i, j) = x(i, j);
            yv(i) = y[i];
        }
        const Eigen::RowVectorXd x_mean = xm.colwise().mean();
        const double y_mean = yv.mean();
        const Eigen::MatrixXd xc = xm.rowwise() - x_mean;
        const Eigen::VectorXd yc = yv.array() - y_mean;

        Eigen::MatrixXd normal = xc.transpose() * xc;
        normal.diagonal().array() += lambda;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
        lu.setThreshold(1e-12);
        if (!lu.isInvertible())
            throw std::invalid_argument("RidgeRegressor::fit: singular normal matrix (use lambda > 0)");
        const Eigen::VectorXd w = lu.solve(xc.transpose() * yc);

        RidgeRegressor model;
        model.weights.assign(w.data(), w.data() + p);
        model.intercept = y_mean - x_mean.dot(w);
        return model;
    }

    double RidgeRegressor::predict(std::span<const double> features) const
    {
        if (features.size() != weights.size())
            throw std::invalid_argument("RidgeRegressor::predict: feature count mismatch");
        double out = intercept;
        for (std::size_t j = 0; j < weights.size(); ++j)
            out += weights[j] * features[j];
        return out;
    }

    namespace
    {
        double running_mean(std::span<const double> y, std::span<const std::size_t> idx)
        {
            // Incremental form keeps a constant sequence exactly constant.
            double m = 0.0;
            for (std::size_t k = 0; k < idx.size(); ++k)
                m += (y[idx[k]] - m) / static_cast<double>(k + 1);
            return m;
        }

        class TreeBuilder
        {
        public:
            TreeBuilder(const FeatureMatrix &x, std::span<const double> y, std::size_t min_leaf, RegressionTree &tree)
                : x_(x), y_(y), min_leaf_(min_leaf), tree_(tree) {}

            int build(std::span<std::size_t> idx)
            {
                const int node_id = static_cast<int>(tree_.nodes.size());
                tree_.nodes.push_back(TreeNode{});
                tree_.nodes[node_id].value = running_mean(y_, idx);

                const std::size_t n = idx.size();
                const auto [lo, hi] = std::minmax_element(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b)
                                                          { return y_[a] < y_[b]; });
                if (n < 2 * min_leaf_ || y_[*lo] == y_[*hi])
                    return node_id;

                double total = 0.0;
                for (std::size_t i : idx)
                    total += y_[i];
                const double parent_term = total * total / static_cast<double>(n);

                int best_feature = -1;
                std::size_t best_pos = 0;
                double best_term = parent_term;
                std::vector<std::size_t> sorted(idx.begin(), idx.end());
                for (std::size_t f = 0; f < x_.cols(); ++f)
                {
                    sort_by_feature(sorted, f);
                    double left = 0.0;
                    for (std::size_t p = 1; p < n; ++p)
                    {
                        left += y_[sorted[p - 1]];
                        if (p < min_leaf_ || n - p < min_leaf_)
                            continue;
                        if (!(x_(sorted[p - 1], f) < x_(sorted[p], f)))
                            continue;
                        const double right = total - left;
                        const double term = left * left / static_cast<double>(p) +
                                            right * right / static_cast<double>(n - p);
                        if (term > best_term)
                        {
                            best_term = term;
                            best_feature = static_cast<int>(f);
                            best_pos = p;
                        }
                    }
                }
                if (best_feature < 0)
                    return node_id;
                auto &best_sorted = sorted;
                sort_by_feature(best_sorted, static_cast<std::size_t>(best_feature));

                const double a = x_(best_sorted[best_pos - 1], static_cast<std::size_t>(best_feature));
                const double b = x_(best_sorted[best_pos], static_cast<std::size_t>(best_feature));
                double threshold = a + 0.5 * (b - a);
                if (!(threshold < b))
                    threshold = a;

                std::copy(best_sorted.begin(), best_sorted.end(), idx.begin());
                tree_.nodes[node_id].feature = best_feature;
                tree_.nodes[node_id].threshold = threshold;
                const int left_id = build(idx.subspan(0, best_pos));
                const int right_id = build(idx.subspan(best_pos));
                tree_.nodes[node_id].left = left_id;
                tree_.nodes[node_id].right = right_id;
                return node_id;
            }

        private:
            void sort_by_feature(std::vector<std::size_t> &v, std::size_t f) const
            {
                std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b)
                          {
                    const double xa = x_(a, f), xb = x_(b, f);
                    return xa != xb ? xa < xb : a < b; });
            }

            const FeatureMatrix &x_;
            std::span<const double> y_;
            std::size_t min_leaf_;
            RegressionTree &tree_;
        };
    }

    RegressionTree RegressionTree::fit(const FeatureMatrix &x, std::span<const double> y,
                                       std::span<const std::size_t> sample, std::size_t min_leaf)
    {
        if (y.size() != x.rows())
            throw std::invalid_argument("RegressionTree::fit: target count does not match rows");
        if (sample.empty())
            throw std::invalid_argument("RegressionTree::fit: empty sample");
        if (min_leaf < 1)
            throw std::invalid_argument("RegressionTree::fit: min_leaf must be at least 1");
        RegressionTree tree;
        std::vector<std::size_t> idx(sample.begin(), sample.end());
        TreeBuilder(x, y, min_leaf, tree).build(idx);
        return tree;
    }

    double RegressionTree::predict(std::span<const double> features) const
    {
        int node = 0;
        while (nodes[node].feature >= 0)
        {
            const TreeNode &n = nodes[node];
            node = features[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
        }
        return nodes[node].value;
    }

    RandomForest RandomForest::fit(const FeatureMatrix &x, std::span<const double> y, const ForestParams &params,
                                   std::size_t threads)
    {
        if (x.rows() < 2)
            throw std::invalid_argument("RandomForest::fit: need at least 2 rows");
        if (params.n_trees < 1)
            throw std::invalid_argument("RandomForest::fit: n_trees must be at least 1");
        if (params.min_leaf < 1 || static_cast<std::size_t>(params.min_leaf) > x.rows())
            throw std::invalid_argument("RandomForest::fit: min_leaf must lie in [1, rows]");

        RandomForest forest;
        forest.trees.resize(static_cast<std::size_t>(params.n_trees));
        parallel_for(forest.trees.size(), threads, [&](std::size_t t)
                     {
            std::vector<std::size_t> sample(x.rows());
            if (params.bootstrap)
            {
                Rng rng(substream_seed(params.seed, t));
                for (auto &s : sample)
                    s = rng.index_below(x.rows());
            }
            else
            {
                std::iota(sample.begin(), sample.end(), std::size_t{0});
            }
            forest.trees[t] = RegressionTree::fit(x, y, sample, static_cast<std::size_t>(params.min_leaf)); });
        return forest;
    }

    double RandomForest::predict(std::span<const double> features) const
    {
        double m = 0.0;
        for (std::size_t t = 0; t < trees.size(); ++t)
            m += (trees[t].predict(features) - m) / static_cast<double>(t + 1);
        return m;
    }

    KnnRegressor KnnRegressor::fit(const FeatureMatrix &x, std::span<const double> y, int k)
    {
        if (k < 1)
            throw std::invalid_argument("KnnRegressor::fit: k must be at least 1");
        if (static_cast<std::size_t>(k) > x.rows())
            throw std::invalid_argument("KnnRegressor::fit: k exceeds the number of rows");
        if (y.size() != x.rows())
            throw std::invalid_argument("KnnRegressor::fit: target count does not match rows");
        return {x, std::vector<double>(y.begin(), y.end()), k};
    }

    double KnnRegressor::predict(std::span<const double> features) const
    {
        if (features.size() != x.cols())
            throw std::invalid_argument("KnnRegressor::predict: feature count mismatch");
        std::vector<std::pair<double, std::size_t>> dist(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i)
        {
            double d2 = 0.0;
            const auto r = x.row(i);
            for (std::size_t j = 0; j < r.size(); ++j)
                d2 += (r[j] - features[j]) * (r[j] - features[j]);
            dist[i] = {d2, i};
        }
        const auto kk = static_cast<std::ptrdiff_t>(k);
        std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());

        if (dist.front().first == 0.0)
        {
            double m = 0.0;
            std::size_t count = 0;
            for (std::ptrdiff_t i = 0; i < kk && dist[static_cast<std::size_t>(i)].first == 0.0; ++i)
                m += (y[dist[static_cast<std::size_t>(i)].second] - m) / static_cast<double>(++count);
            return m;
        }
        double num = 0.0;
        double den = 0.0;
        for (std::ptrdiff_t i = 0; i < kk; ++i)
        {
            const auto &[d2, idx] = dist[static_cast<std::size_t>(i)];
            const double w = 1.0 / std::sqrt(d2);
            num += w * y[idx];
            den += w;
        }
        return num / den;
    }

} // namespace thinarray::emu
