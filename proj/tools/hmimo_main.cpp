// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field LoS channel models and capacity limits for
// holographic MIMO surfaces with arbitrary placements
//
// Licensed under the Apache License, Version 2.0;
// see http://www.apache.org/licenses/LICENSE-2.0
//
// Command-line experiment runner. Subcommands:
//   nmse      model-vs-oracle NMSE sweep
//   eigen     singular-value spectra sweep
//   capacity  exact capacity and closed-form bounds sweep
//   dump      assemble one channel matrix and write CSV + binary dumps

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>

#include "hmimo/errors.hpp"
#include "hmimo/runner.hpp"
#include "hmimo/version.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    int quad_order = 0;    // 0 = keep config value
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file")->required();
    cmd->add_option("--out", opts.out_dir, "output directory (overrides output.dir)");
    cmd->add_option("--quad-order", opts.quad_order, "quadrature order per axis (overrides quad.order)");
    cmd->add_option("--seed", opts.seed, "random seed recorded in the sidecar (overrides seed)")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
}

hmimo::ExperimentConfig load_config(const CommonOptions& opts) {
    hmimo::ExperimentConfig cfg = hmimo::ExperimentConfig::parse_file(opts.config_path);
    if (!opts.out_dir.empty())
        cfg.output_dir = opts.out_dir;
    if (opts.quad_order > 0) {
        cfg.quad.order = opts.quad_order;
        cfg.validate();
    }
    if (opts.seed_set)
        cfg.seed = opts.seed;
    return cfg;
}

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;     // config or I/O errors
constexpr int kExitNumerical = 2;  // numerical failures

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(hmimo::kToolName) +
                 " - near-field LoS holographic-MIMO channel models and capacity limits"};
    app.set_version_flag("--version", std::string(hmimo::kToolName) + " " + hmimo::kToolVersion);
    app.require_subcommand(1);

    CommonOptions opts;
    std::string dump_model = "Exact";

    CLI::App* nmse = app.add_subcommand("nmse", "NMSE of CD-CM/CI-CM against the exact oracle");
    add_common(nmse, opts);
    CLI::App* eigen = app.add_subcommand("eigen", "singular-value spectra per model");
    add_common(eigen, opts);
    CLI::App* capacity = app.add_subcommand("capacity", "exact capacity and upper bounds");
    add_common(capacity, opts);
    CLI::App* dump = app.add_subcommand("dump", "write one assembled channel matrix");
    add_common(dump, opts);
    dump->add_option("--model", dump_model, "channel model: Exact, CDCM or CICM")
        ->default_val("Exact");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        const hmimo::ExperimentConfig cfg = load_config(opts);
        const std::filesystem::path out_dir = cfg.output_dir;

        if (nmse->parsed()) {
            const auto artifacts = hmimo::run_nmse_sweep(cfg, out_dir);
            std::cout << "wrote " << artifacts.csv.string() << '\n';
        } else if (eigen->parsed()) {
            const auto artifacts = hmimo::run_eigen(cfg, out_dir);
            std::cout << "wrote " << artifacts.csv.string() << '\n';
        } else if (capacity->parsed()) {
            const auto artifacts = hmimo::run_capacity_sweep(cfg, out_dir);
            std::cout << "wrote " << artifacts.csv.string() << '\n';
        } else if (dump->parsed()) {
            const auto model = hmimo::channel_model_from_string(dump_model);
            const auto artifacts = hmimo::dump_channel(cfg, model, out_dir);
            std::cout << "wrote " << artifacts.csv.string() << " and "
                      << artifacts.binary.string() << '\n';
        }
        return kExitOk;
    } catch (const hmimo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const hmimo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
