#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "onebit/recovery.hpp"

// Experiment harness behind the CLI subcommands. Each run_* function writes
// its artifacts under cfg.out_dir and is deterministic given the config
// (all randomness flows from explicit seeds).
namespace onebit {

/// Plain-text key-value config: "key = value" lines, '#' comments.
struct KeyValueFile {
    std::map<std::string, std::string> values;

    static KeyValueFile load(const std::string& path);

    bool has(const std::string& key) const { return values.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<int> get_int_list(const std::string& key,
                                  const std::vector<int>& fallback) const;
};

struct ExperimentConfig {
    std::string family = "ar1";
    double rho = 0.5;
    double r0 = 1.0;
    int n = 31;        // process dimension (ACF sequence length)
    int lags = 30;     // recovered lags 1..lags
    double d = 0.3;
    double sigma = 0.1;  // diagonal value of the threshold covariance
    std::vector<int> nx = {10000};
    int trials = 5;    // E
    std::uint64_t seed = 1;
    Method method = Method::gauss_legendre;
    int n_q = 13;
    int n_m = 2000;
    bool include_full_pa = false;
    std::string out_dir = ".";
    std::string data_path;  // optional dataset input for `recover`

    static ExperimentConfig from_file(const KeyValueFile& file);
    void validate() const;
    SolveOptions solve_options() const;
};

int run_simulate(const ExperimentConfig& cfg);
int run_recover(const ExperimentConfig& cfg);
int run_benchmark(const ExperimentConfig& cfg);
int run_crosscorr(const ExperimentConfig& cfg);

}  // namespace onebit
