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

#include "thinarray/parallel.hpp"
#include "thinarray/random.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace thinarray::emu
{
    const CvCell &CvReport::at(std::size_t size, Target target) const
    {
        for (const auto &c : cells)
            if (c.training_size == size && c.target == target)
                return c;
        throw std::out_of_range("CvReport: no cell for training size " + std::to_string(size));
    }

    std::vector<std::vector<std::size_t>> fold_partition(std::size_t n, int folds, std::uint64_t seed)
    {
        if (folds < 2)
            throw std::invalid_argument("fold_partition: need at least 2 folds");
        if (static_cast<std::size_t>(folds) > n)
            throw std::invalid_argument("fold_partition: more folds than rows");
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Rng rng(seed);
        for (std::size_t i = n; i-- > 1;)
            std::swap(perm[i], perm[rng.index_below(i + 1)]);

        const auto k = static_cast<std::size_t>(folds);
        std::vector<std::vector<std::size_t>> out(k);
        for (std::size_t f = 0; f < k; ++f)
            out[f].assign(perm.begin() + static_cast<std::ptrdiff_t>(f * n / k),
                          perm.begin() + static_cast<std::ptrdiff_t>((f + 1) * n / k));
        return out;
    }

    CvReport cross_validate(const Dataset &data, const ModelSpec &spec, int folds,
                            std::span<const std::size_t> training_sizes, std::uint64_t seed,
                            std::size_t threads, std::vector<Target> targets)
    {
        data.validate();
        if (training_sizes.empty())
            throw std::invalid_argument("cross_validate: no training sizes given");
        if (targets.empty())
            throw std::invalid_argument("cross_validate: no targets given");
        const auto partition = fold_partition(data.size(), folds, seed);

        std::size_t available = data.size();
        for (const auto &f : partition)
            available = std::min(available, data.size() - f.size());
        for (std::size_t i = 0; i < training_sizes.size(); ++i)
        {
            if (training_sizes[i] > available)
                throw std::invalid_argument("cross_validate: training size " + std::to_string(training_sizes[i]) +
                                            " exceeds the " + std::to_string(available) +
                                            " rows available outside each held-out fold");
            if (training_sizes[i] < 2)
                throw std::invalid_argument("cross_validate: training sizes must be at least 2");
            if (i > 0 && training_sizes[i] <= training_sizes[i - 1])
                throw std::invalid_argument("cross_validate: training sizes must be strictly increasing");
        }

        const std::size_t n_folds = partition.size();
        const std::size_t n_targets = targets.size();
        // scores[(size * n_targets + target) * n_folds + fold]
        std::vector<double> scores(training_sizes.size() * n_targets * n_folds);
        parallel_for(training_sizes.size() * n_folds, threads, [&](std::size_t job)
                     {
            const std::size_t s = job / n_folds;
            const std::size_t f = job % n_folds;
            std::vector<std::size_t> train_idx;
            for (std::size_t g = 0; g < n_folds; ++g)
                if (g != f)
                    train_idx.insert(train_idx.end(), partition[g].begin(), partition[g].end());
            train_idx.resize(training_sizes[s]);
            const Dataset train_set = data.subset(train_idx);
            const Dataset test_set = data.subset(partition[f]);

            for (std::size_t t = 0; t < n_targets; ++t)
            {
                const EmulatorModel model = train(train_set, spec, targets[t]);
                std::vector<double> predicted;
                predicted.reserve(test_set.size());
                for (const auto &row : test_set.rows)
                    predicted.push_back(model.predict(row.input));
                scores[(s * n_targets + t) * n_folds + f] = nrmse(test_set.targets(targets[t]), predicted);
            } });

        CvReport report;
        report.folds = folds;
        for (std::size_t s = 0; s < training_sizes.size(); ++s)
            for (std::size_t t = 0; t < n_targets; ++t)
            {
                const double *v = &scores[(s * n_targets + t) * n_folds];
                double sum = 0.0;
                for (std::size_t f = 0; f < n_folds; ++f)
                    sum += v[f];
                const double mean = sum / static_cast<double>(n_folds);
                double ss = 0.0;
                for (std::size_t f = 0; f < n_folds; ++f)
                    ss += (v[f] - mean) * (v[f] - mean);
                report.cells.push_back({training_sizes[s], targets[t], mean, std::sqrt(ss / static_cast<double>(n_folds - 1))});
            }
        return report;
    }

} // namespace thinarray::emu
