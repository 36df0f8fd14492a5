// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "sgm/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitFeasibility = 3;
constexpr int kExitCheckFailed = 4;

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::string out_dir;
};

void write_artifact(const GlobalOptions& opts, const sgm::cli::ExperimentConfig& config,
                    const std::string& filename, const std::string& content) {
    std::string dir = !opts.out_dir.empty() ? opts.out_dir : config.out;
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / filename, std::ios::binary);
    if (!out) throw sgm::ConfigError("cannot write output file in '" + dir + "'");
    out << content;
}

sgm::cli::ExperimentConfig load(const GlobalOptions& opts) {
    auto config = sgm::cli::load_config_file(opts.config_path);
    if (opts.seed) config.master_seed = *opts.seed;
    if (opts.threads)
        config.threads = *opts.threads;
    else if (config.threads == 0) {
        // optional default-threads override; flag and config still win
        if (const char* env = std::getenv("SGM_THREADS")) config.threads = std::max(0, std::atoi(env));
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and Monte Carlo moments of subgraph counts in random graph ensembles"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "experiment config (JSON)")->required();
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "override the config master seed");
    int threads_value = 0;
    auto* threads_opt = app.add_option("--threads", threads_value, "worker threads (0 = all cores)");
    app.add_option("--out", opts.out_dir, "directory for output artifacts");

    auto* cmd_exact = app.add_subcommand("exact", "exact moment reports");
    auto* cmd_census = app.add_subcommand("census", "overlap tables and closed forms");
    auto* cmd_asymptotic = app.add_subcommand("asymptotic", "volume/surface expansion");
    auto* cmd_simulate = app.add_subcommand("simulate", "seeded Monte Carlo, CSV output");
    auto* cmd_compare = app.add_subcommand("compare", "simulation vs exact values");
    bool check_mode = false;
    cmd_compare->add_flag("--check", check_mode, "exit nonzero when a pinned check fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }
    if (seed_opt->count()) opts.seed = seed_value;
    if (threads_opt->count()) opts.threads = threads_value;

    try {
        auto config = load(opts);
        if (cmd_exact->parsed()) {
            auto report = sgm::cli::run_exact(config);
            std::string text = report.dump(2) + "\n";
            write_artifact(opts, config, "exact.json", text);
            std::cout << text;
        } else if (cmd_census->parsed()) {
            auto report = sgm::cli::run_census(config);
            std::string text = report.dump(2) + "\n";
            write_artifact(opts, config, "census.json", text);
            std::cout << text;
        } else if (cmd_asymptotic->parsed()) {
            auto report = sgm::cli::run_asymptotic(config);
            std::string text = report.dump(2) + "\n";
            write_artifact(opts, config, "asymptotic.json", text);
            std::cout << text;
        } else if (cmd_simulate->parsed()) {
            auto csv = sgm::cli::run_simulate(config);
            write_artifact(opts, config, "simulate.csv", csv);
            if (auto dump = sgm::cli::run_sample_dump(config); !dump.empty())
                write_artifact(opts, config, "samples.txt", dump);
            std::cout << csv;
        } else if (cmd_compare->parsed()) {
            auto result = sgm::cli::run_compare(config);
            std::string text = result.report.dump(2) + "\n";
            write_artifact(opts, config, "compare.json", text);
            std::cout << text;
            if (check_mode && !result.all_checks_passed) return kExitCheckFailed;
        }
    } catch (const sgm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const sgm::FeasibilityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFeasibility;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
