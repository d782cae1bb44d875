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

#include "commands.hpp"

#include "manifest.hpp"

#include "thinarray/array_gen.hpp"
#include "thinarray/beam_model.hpp"
#include "thinarray/emulator.hpp"
#include "thinarray/io.hpp"
#include "thinarray/net_sim.hpp"
#include "thinarray/optimizer.hpp"
#include "thinarray/parallel.hpp"
#include "thinarray/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef THINARRAY_VERSION
#define THINARRAY_VERSION "0.0.0"
#endif

namespace thinarray::cli
{
    namespace
    {
        // Flags shared by several subcommands.
        struct Common
        {
            std::uint64_t seed = 0;
            std::size_t threads = 0;
            std::string out;
        };

        struct ModelFlags
        {
            std::string kind = "rf";
            int trees = 200;
            int min_leaf = 2;
            bool no_bootstrap = false;
            double lambda = 1.0;
            int k = 5;

            emu::ModelSpec spec(std::uint64_t seed) const
            {
                emu::ModelSpec s;
                s.kind = emu::kind_from_name(kind);
                s.ridge_lambda = lambda;
                s.forest = {trees, min_leaf, !no_bootstrap, seed};
                s.knn_k = k;
                return s;
            }
        };

        void add_model_flags(CLI::App *cmd, ModelFlags &m)
        {
            cmd->add_option("--model", m.kind, "Model kind")->check(CLI::IsMember({"ridge", "rf", "knn"}));
            cmd->add_option("--trees", m.trees, "Random forest: number of trees")->capture_default_str();
            cmd->add_option("--min-leaf", m.min_leaf, "Random forest: minimum samples per leaf")->capture_default_str();
            cmd->add_flag("--no-bootstrap", m.no_bootstrap, "Random forest: train every tree on the full set");
            cmd->add_option("--lambda", m.lambda, "Ridge: regularization strength")->capture_default_str();
            cmd->add_option("--k", m.k, "k-NN: neighbour count")->capture_default_str();
        }

        // Optional explicit design point; unset fields fall back to a result file.
        struct PointFlags
        {
            std::string result;
            std::optional<double> d_y, d_z, alpha_y, alpha_z;

            InputConfig resolve() const
            {
                InputConfig x;
                bool from_result = false;
                if (!result.empty())
                {
                    x = io::result_from_json(io::read_file(result)).best_input;
                    from_result = true;
                }
                if (!from_result && !(d_y && d_z && alpha_y && alpha_z))
                    throw std::invalid_argument("give --result or all of --d-y, --d-z, --alpha-y, --alpha-z");
                if (d_y)
                    x.d_y = *d_y;
                if (d_z)
                    x.d_z = *d_z;
                if (alpha_y)
                    x.alpha_y = *alpha_y;
                if (alpha_z)
                    x.alpha_z = *alpha_z;
                return x;
            }
        };

        void add_point_flags(CLI::App *cmd, PointFlags &p)
        {
            cmd->add_option("--result", p.result, "Optimization result whose best input is used");
            cmd->add_option("--d-y", p.d_y, "Horizontal spacing [wavelengths]");
            cmd->add_option("--d-z", p.d_z, "Vertical spacing [wavelengths]");
            cmd->add_option("--alpha-y", p.alpha_y, "Horizontal decay rate");
            cmd->add_option("--alpha-z", p.alpha_z, "Vertical decay rate");
        }

        struct ConfigSource
        {
            net::NetworkConfig config;
            std::string digest;
        };

        ConfigSource load_config(const std::string &path)
        {
            if (path.empty())
            {
                net::NetworkConfig cfg;
                return {cfg, "sha256:" + sha256_hex(net::network_config_to_json(cfg))};
            }
            const std::string text = io::read_file(path);
            return {net::parse_network_config(text), "sha256:" + sha256_hex(text)};
        }

        emu::EmulatorModel load_model(const std::string &path, emu::Target expected)
        {
            auto model = emu::EmulatorModel::from_json(io::read_file(path));
            if (model.target() != expected)
                throw std::invalid_argument("model '" + path + "' predicts " + std::string(emu::target_name(model.target())) +
                                            ", expected " + std::string(emu::target_name(expected)));
            return model;
        }

        // Fails early (before long computations) when the output cannot be created.
        void check_writable(const std::string &path)
        {
            io::write_file(path, "");
        }

        class Runner
        {
        public:
            Runner(std::vector<std::string> args, std::ostream &out) : args_(std::move(args)), out_(out) {}

            void finish(const std::string &command, std::uint64_t seed, const std::string &config_digest,
                        const std::vector<std::string> &outputs)
            {
                RunManifest m;
                m.tool_version = THINARRAY_VERSION;
                m.command = command;
                m.arguments = args_;
                m.seed = seed;
                m.config_digest = config_digest;
                m.started_utc = started_;
                m.finished_utc = utc_now_iso8601();
                m.outputs = outputs;
                io::write_file(manifest_path_for(outputs.front()), m.to_json());
            }

            std::ostream &out() { return out_; }

        private:
            std::vector<std::string> args_;
            std::ostream &out_;
            std::string started_ = utc_now_iso8601();
        };

        std::string manifest_ref(const std::string &output)
        {
            return manifest_path_for(output).filename().string();
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"thinarray: simulate, emulate and optimize thinned antenna arrays"};
        app.name("thinarray");
        app.set_version_flag("--version", THINARRAY_VERSION);
        app.require_subcommand(1);

        Common common;
        std::function<void()> action;
        Runner runner(args, out);

        auto add_common = [&](CLI::App *cmd, bool with_out = true)
        {
            cmd->add_option("--seed", common.seed, "Master seed")->capture_default_str();
            cmd->add_option("--threads", common.threads,
                            "Worker threads (0: THINARRAY_THREADS or hardware concurrency); never changes results");
            if (with_out)
                cmd->add_option("--out", common.out, "Output path")->required();
        };

        // gen-dataset ------------------------------------------------------
        std::string config_path;
        std::size_t n_configs = 0, n_iter = 0;
        auto *gen = app.add_subcommand("gen-dataset", "Simulate random design points into a dataset CSV");
        gen->add_option("--config", config_path, "Network configuration (JSON)");
        gen->add_option("--n-configs", n_configs, "Number of random design points")->required()->check(CLI::PositiveNumber);
        gen->add_option("--n-iter", n_iter, "Monte Carlo iterations per design point")->required()->check(CLI::PositiveNumber);
        add_common(gen);
        gen->callback([&]
                      { action = [&]
                                 {
            const auto cfg = load_config(config_path);
            check_writable(common.out);
            const auto data = generate_dataset(cfg.config, net::ThinningSetup{}, n_configs, n_iter, common.seed,
                                               resolve_thread_count(common.threads));
            io::write_file(common.out, io::dataset_to_csv(data));
            runner.finish("gen-dataset", common.seed, cfg.digest, {common.out});
            runner.out() << "wrote " << data.size() << " rows to " << common.out << '\n'; }; });

        // train --------------------------------------------------------------
        std::string dataset_path, target_name = "mean";
        ModelFlags model_flags;
        auto *train_cmd = app.add_subcommand("train", "Train an emulator for one output");
        train_cmd->add_option("--dataset", dataset_path, "Dataset CSV")->required();
        train_cmd->add_option("--target", target_name, "Output to model")->check(CLI::IsMember({"mean", "p5"}))->capture_default_str();
        add_model_flags(train_cmd, model_flags);
        train_cmd->get_option("--model")->required();
        add_common(train_cmd);
        train_cmd->callback([&]
                            { action = [&]
                                       {
            const auto data = io::dataset_from_csv(io::read_file(dataset_path));
            const auto target = emu::target_from_name(target_name);
            const auto model = emu::train(data, model_flags.spec(common.seed), target, resolve_thread_count(common.threads));
            io::write_file(common.out, model.to_json(manifest_ref(common.out)));
            runner.finish("train", common.seed, "sha256:" + sha256_hex(io::read_file(dataset_path)), {common.out});
            runner.out() << "trained " << emu::kind_name(model.kind()) << " (" << target_name << ") on "
                         << data.size() << " rows -> " << common.out << '\n'; }; });

        // learning-curve -----------------------------------------------------
        std::vector<std::size_t> sizes;
        int folds = 5;
        auto *lc = app.add_subcommand("learning-curve", "Cross-validated nRMSE versus training size");
        lc->add_option("--dataset", dataset_path, "Dataset CSV")->required();
        lc->add_option("--sizes", sizes, "Training sizes, comma separated")->required()->delimiter(',');
        lc->add_option("--folds", folds, "Cross-validation folds")->capture_default_str();
        add_model_flags(lc, model_flags);
        lc->get_option("--model")->required();
        add_common(lc);
        lc->callback([&]
                     { action = [&]
                                {
            const auto data = io::dataset_from_csv(io::read_file(dataset_path));
            check_writable(common.out);
            const auto report = emu::cross_validate(data, model_flags.spec(common.seed), folds, sizes, common.seed,
                                                    resolve_thread_count(common.threads));
            io::write_file(common.out, io::cv_report_to_csv(report));
            runner.finish("learning-curve", common.seed, "sha256:" + sha256_hex(io::read_file(dataset_path)), {common.out});
            runner.out() << "wrote " << report.cells.size() << " learning-curve cells to " << common.out << '\n'; }; });

        // optimize -----------------------------------------------------------
        std::string model_mean_path, model_p5_path;
        double constraint_db = 6.0;
        std::size_t budget = 100000;
        auto *optc = app.add_subcommand("optimize", "Maximize predicted mean SINR subject to SINR5 > constraint");
        optc->add_option("--model-mean", model_mean_path, "Emulator of mean SINR")->required();
        optc->add_option("--model-p5", model_p5_path, "Emulator of 5th-percentile SINR")->required();
        optc->add_option("--constraint-db", constraint_db, "Lower bound on predicted SINR5 [dB]")->capture_default_str();
        optc->add_option("--budget", budget, "Emulator evaluations")->capture_default_str()->check(CLI::PositiveNumber);
        add_common(optc);
        optc->callback([&]
                       { action = [&]
                                  {
            const emu::EmulatorPair models{load_model(model_mean_path, emu::Target::mean),
                                           load_model(model_p5_path, emu::Target::p5)};
            const auto result = opt::optimize(opt::make_surrogate(models), Bounds{},
                                              {constraint_db, budget, common.seed, resolve_thread_count(common.threads)});
            io::write_file(common.out, io::result_to_json(result, manifest_ref(common.out)));
            runner.finish("optimize", common.seed,
                          "sha256:" + sha256_hex(io::read_file(model_mean_path) + io::read_file(model_p5_path)), {common.out});
            const auto &b = result.best_input;
            runner.out() << "constraint: SINR5 > " << io::format_double(constraint_db) << " dB\n"
                         << "best: d_y=" << io::format_double(b.d_y) << " d_z=" << io::format_double(b.d_z)
                         << " alpha_y=" << io::format_double(b.alpha_y) << " alpha_z=" << io::format_double(b.alpha_z) << '\n'
                         << "predicted mean=" << io::format_double(result.predicted_mean_db)
                         << " dB, p5=" << io::format_double(result.predicted_p5_db) << " dB, feasible="
                         << (result.feasible ? "yes" : "no") << ", evaluations=" << result.evaluations_used << '\n'; }; });

        // activation-map / mask ----------------------------------------------
        PointFlags point;
        int lattice_rows = 100, lattice_cols = 99, n_active = 64;
        std::size_t n_samples = 1000;
        auto add_lattice = [&](CLI::App *cmd)
        {
            cmd->add_option("--lattice-rows", lattice_rows, "Lattice rows (z)")->capture_default_str();
            cmd->add_option("--lattice-cols", lattice_cols, "Lattice columns (y)")->capture_default_str();
            cmd->add_option("--n-active", n_active, "Active elements (multiple of 4)")->capture_default_str();
            add_point_flags(cmd, point);
        };
        auto *amap = app.add_subcommand("activation-map", "Per-element activation probability CSV");
        add_lattice(amap);
        amap->add_option("--samples", n_samples, "Masks to average")->capture_default_str()->check(CLI::PositiveNumber);
        add_common(amap);
        amap->callback([&]
                       { action = [&]
                                  {
            const InputConfig x = point.resolve();
            const array::LatticeSpec lattice{lattice_rows, lattice_cols, x.d_y, x.d_z};
            const auto map = array::activation_probability_map(lattice, {x.alpha_y, x.alpha_z}, n_active, n_samples,
                                                               common.seed, resolve_thread_count(common.threads));
            std::ostringstream csv;
            array::write_activation_csv(csv, map);
            io::write_file(common.out, csv.str());
            runner.finish("activation-map", common.seed, "", {common.out});
            runner.out() << "wrote activation map (" << n_samples << " masks) to " << common.out << '\n'; }; });

        auto *mask_cmd = app.add_subcommand("mask", "Generate one activation mask as a 0/1 text grid");
        add_lattice(mask_cmd);
        add_common(mask_cmd);
        mask_cmd->callback([&]
                           { action = [&]
                                      {
            const InputConfig x = point.resolve();
            const array::LatticeSpec lattice{lattice_rows, lattice_cols, x.d_y, x.d_z};
            const auto mask = array::generate_mask(lattice, {x.alpha_y, x.alpha_z}, n_active, common.seed);
            io::write_file(common.out, mask.to_text());
            runner.finish("mask", common.seed, "", {common.out});
            runner.out() << "wrote " << mask.n_active() << "-element mask to " << common.out << '\n'; }; });

        // slices -------------------------------------------------------------
        std::string axis = "alpha_y";
        std::size_t n_points = 50;
        auto *slices = app.add_subcommand("slices", "Emulator predictions along one parameter through a center point");
        slices->add_option("--model-mean", model_mean_path, "Emulator of mean SINR")->required();
        slices->add_option("--model-p5", model_p5_path, "Emulator of 5th-percentile SINR")->required();
        slices->add_option("--axis", axis, "Parameter to vary")->required()->check(CLI::IsMember({"d_y", "d_z", "alpha_y", "alpha_z"}));
        slices->add_option("--points", n_points, "Points along the axis")->capture_default_str()->check(CLI::PositiveNumber);
        add_point_flags(slices, point);
        add_common(slices);
        slices->callback([&]
                         { action = [&]
                                    {
            const emu::EmulatorPair models{load_model(model_mean_path, emu::Target::mean),
                                           load_model(model_p5_path, emu::Target::p5)};
            const auto curve = opt::slice_scan(opt::make_surrogate(models), Bounds{}, point.resolve(),
                                               axis_from_name(axis), n_points);
            io::write_file(common.out, io::slice_to_csv(curve));
            runner.finish("slices", common.seed, "", {common.out});
            runner.out() << "wrote " << curve.size() << " slice points to " << common.out << '\n'; }; });

        // compare ------------------------------------------------------------
        opt::FamilyOptions family;
        auto *cmp = app.add_subcommand("compare", "Simulate reference, random and optimal-family antennas");
        cmp->add_option("--config", config_path, "Network configuration (JSON)");
        cmp->add_option("--n-optimal", family.n_optimal_samples, "Antennas drawn from the optimal configuration")->capture_default_str()->check(CLI::PositiveNumber);
        cmp->add_option("--n-random", family.n_random_configs, "Antennas drawn from random configurations")->capture_default_str();
        cmp->add_option("--n-iter", family.n_iter, "Monte Carlo iterations per antenna")->capture_default_str()->check(CLI::PositiveNumber);
        add_point_flags(cmp, point);
        add_common(cmp);
        cmp->callback([&]
                      { action = [&]
                                 {
            const auto cfg = load_config(config_path);
            check_writable(common.out);
            family.network = cfg.config;
            family.seed = common.seed;
            family.threads = resolve_thread_count(common.threads);
            const auto refs = opt::reference_antennas();
            const auto rows = opt::compare_families(point.resolve(), refs, family);
            io::write_file(common.out, io::families_to_csv(rows));
            runner.finish("compare", common.seed, cfg.digest, {common.out});
            runner.out() << "wrote " << rows.size() << " antennas to " << common.out << '\n'; }; });

        // pattern ------------------------------------------------------------
        int upa_rows = 8, upa_cols = 8;
        double spacing_y = 0.5, spacing_z = 0.5, theta_step = 1.0, phi_step = 1.0;
        auto *pattern = app.add_subcommand("pattern", "Gain pattern CSV of a UPA steered at boresight");
        pattern->add_option("--rows", upa_rows, "Rows (z)")->capture_default_str();
        pattern->add_option("--cols", upa_cols, "Columns (y)")->capture_default_str();
        pattern->add_option("--spacing-y", spacing_y, "Horizontal spacing [wavelengths]")->capture_default_str();
        pattern->add_option("--spacing-z", spacing_z, "Vertical spacing [wavelengths]")->capture_default_str();
        pattern->add_option("--theta-step", theta_step, "Zenith grid step [deg]")->capture_default_str()->check(CLI::PositiveNumber);
        pattern->add_option("--phi-step", phi_step, "Azimuth grid step [deg]")->capture_default_str()->check(CLI::PositiveNumber);
        add_common(pattern);
        pattern->callback([&]
                          { action = [&]
                                     {
            const auto geom = array::upa_geometry(upa_rows, upa_cols, spacing_y, spacing_z);
            const auto w = beam::conjugate_weights(geom, {std::numbers::pi / 2.0, 0.0});
            std::vector<double> thetas, phis;
            for (double t = 0.0; t <= 180.0 + 1e-9; t += theta_step)
                thetas.push_back(std::min(t, 180.0));
            for (double p = -180.0 + phi_step; p <= 180.0 + 1e-9; p += phi_step)
                phis.push_back(std::min(p, 180.0));
            std::ostringstream csv;
            beam::write_pattern_csv(csv, geom, w, thetas, phis);
            io::write_file(common.out, csv.str());
            runner.finish("pattern", common.seed, "", {common.out});
            runner.out() << "wrote pattern to " << common.out << '\n'; }; });

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try
        {
            if (action)
                action();
            return exit_ok;
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::exception &e)
        {
            err << "runtime error: " << e.what() << '\n';
            return exit_runtime;
        }
    }

} // namespace thinarray::cli
