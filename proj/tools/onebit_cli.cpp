#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <string>

#include "onebit/commands.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::string out_dir;
    std::string method;
    std::string data_path;
    int seed = -1;
    int n_q = -1;
    int n_m = -1;
};

// config file first, command-line flags win
onebit::ExperimentConfig resolve(const Flags& flags) {
    onebit::KeyValueFile file;
    if (!flags.config_path.empty())
        file = onebit::KeyValueFile::load(flags.config_path);
    onebit::ExperimentConfig cfg = onebit::ExperimentConfig::from_file(file);
    if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
    if (!flags.method.empty()) cfg.method = onebit::method_from_string(flags.method);
    if (!flags.data_path.empty()) cfg.data_path = flags.data_path;
    if (flags.seed >= 0) cfg.seed = static_cast<std::uint64_t>(flags.seed);
    if (flags.n_q > 0) cfg.n_q = flags.n_q;
    if (flags.n_m > 0) cfg.n_m = flags.n_m;
    return cfg;
}

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "key = value experiment config");
    cmd->add_option("--seed", flags.seed, "override the config seed");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--method", flags.method,
                    "pade_full, pade_fast, gauss_legendre or monte_carlo");
    cmd->add_option("--nq", flags.n_q, "Gauss-Legendre points (default 13)");
    cmd->add_option("--nm", flags.n_m, "Monte-Carlo nodes (default 2000)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Autocorrelation and cross-correlation recovery from one-bit "
                 "samples taken against Gaussian time-varying thresholds"};
    app.require_subcommand(1);

    Flags flags;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "generate a sign dataset and its sample statistics");
    CLI::App* recover = app.add_subcommand(
        "recover", "recover the input autocorrelation sequence");
    CLI::App* benchmark = app.add_subcommand(
        "benchmark", "compare recovery methods across sample sizes");
    CLI::App* crosscorr = app.add_subcommand(
        "crosscorr", "recover the input/output cross-correlation");
    for (CLI::App* cmd : {simulate, recover, benchmark, crosscorr})
        add_common(cmd, flags);
    recover->add_option("--data", flags.data_path, "dataset CSV to recover from");

    CLI11_PARSE(app, argc, argv);

    try {
        const onebit::ExperimentConfig cfg = resolve(flags);
        if (simulate->parsed()) return onebit::run_simulate(cfg);
        if (recover->parsed()) return onebit::run_recover(cfg);
        if (benchmark->parsed()) return onebit::run_benchmark(cfg);
        return onebit::run_crosscorr(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
