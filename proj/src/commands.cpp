#include "onebit/commands.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "onebit/bussgang.hpp"
#include "onebit/io.hpp"
#include "onebit/signal.hpp"

namespace onebit {

namespace fs = std::filesystem;

namespace {

void trim(std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
}

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

SignalModel make_signal(const ExperimentConfig& cfg) {
    if (cfg.family != "ar1")
        throw std::invalid_argument("unknown signal family '" + cfg.family + "'");
    return SignalModel{ar1_acf(cfg.rho, cfg.r0, cfg.n - 1)};
}

std::vector<double> lag_slice(const std::vector<double>& r_y_lag, int lags) {
    if (lags + 1 > static_cast<int>(r_y_lag.size()))
        throw std::invalid_argument("requested more lags than the dataset dimension allows");
    return {r_y_lag.begin() + 1, r_y_lag.begin() + 1 + lags};
}

RecoveryResult recover_lags(const ExperimentConfig& cfg, Method method,
                            const std::vector<double>& lags, double mu_hat) {
    if (method == Method::pade_full)
        return solve_full_pa(lags, cfg.d, cfg.solve_options());
    return solve_fast(method, lags, mu_hat, cfg.d, cfg.solve_options());
}

// diagonal averages of an N x N matrix, lags 0..N-1
std::vector<double> diag_means(const Eigen::MatrixXd& m) {
    std::vector<double> out(m.rows());
    for (Eigen::Index l = 0; l < m.rows(); ++l) out[l] = m.diagonal(l).mean();
    return out;
}

}  // namespace

KeyValueFile KeyValueFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    KeyValueFile file;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        trim(key);
        trim(val);
        if (!key.empty()) file.values[key] = val;
    }
    return file;
}

std::string KeyValueFile::get(const std::string& key, const std::string& fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : std::stod(it->second);
}

int KeyValueFile::get_int(const std::string& key, int fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : std::stoi(it->second);
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
    const auto it = values.find(key);
    if (it == values.end()) return fallback;
    return it->second == "true" || it->second == "1" || it->second == "yes";
}

std::vector<int> KeyValueFile::get_int_list(const std::string& key,
                                            const std::vector<int>& fallback) const {
    const auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::vector<int> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        trim(item);
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list for config key " + key);
    return out;
}

ExperimentConfig ExperimentConfig::from_file(const KeyValueFile& f) {
    ExperimentConfig cfg;
    cfg.family = f.get("family", cfg.family);
    cfg.rho = f.get_double("rho", cfg.rho);
    cfg.r0 = f.get_double("r0", cfg.r0);
    cfg.n = f.get_int("N", cfg.n);
    cfg.lags = f.get_int("L", std::min(cfg.lags, cfg.n - 1));
    cfg.d = f.get_double("d", cfg.d);
    cfg.sigma = f.get_double("sigma", cfg.sigma);
    cfg.nx = f.get_int_list("nx", cfg.nx);
    cfg.trials = f.get_int("trials", cfg.trials);
    cfg.seed = static_cast<std::uint64_t>(f.get_int("seed", static_cast<int>(cfg.seed)));
    if (f.has("method")) cfg.method = method_from_string(f.get("method", ""));
    cfg.n_q = f.get_int("nq", cfg.n_q);
    cfg.n_m = f.get_int("nm", cfg.n_m);
    cfg.include_full_pa = f.get_bool("include_full_pa", cfg.include_full_pa);
    cfg.out_dir = f.get("out", cfg.out_dir);
    cfg.data_path = f.get("data", cfg.data_path);
    return cfg;
}

void ExperimentConfig::validate() const {
    if (n < 2) throw std::invalid_argument("config: N must be at least 2");
    if (lags < 1 || lags > n - 1)
        throw std::invalid_argument("config: L must lie in [1, N-1]");
    if (sigma < 0) throw std::invalid_argument("config: sigma must be >= 0");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (nx.empty()) throw std::invalid_argument("config: nx list is empty");
    for (const int v : nx)
        if (v < 1) throw std::invalid_argument("config: nx entries must be positive");
    if (n_q < 1 || n_q > 64) throw std::invalid_argument("config: nq must be in [1, 64]");
    if (n_m < 1) throw std::invalid_argument("config: nm must be positive");
}

SolveOptions ExperimentConfig::solve_options() const {
    SolveOptions opts;
    opts.n_q = n_q;
    opts.n_m = n_m;
    opts.seed = seed;
    return opts;
}

int run_simulate(const ExperimentConfig& cfg) {
    cfg.validate();
    const SignalModel sig = make_signal(cfg);
    const ThresholdModel thr{cfg.d, cfg.sigma};
    const SignDataset ds = sample_dataset(sig, thr, cfg.nx.front(), cfg.seed, false);
    const SampleStats stats = sample_autocorr(ds);
    io::write_dataset_csv(ds, out_path(cfg, "dataset.csv"));
    io::write_stats_csv(stats, out_path(cfg, "stats.csv"));
    return 0;
}

int run_recover(const ExperimentConfig& cfg) {
    cfg.validate();
    SignDataset ds;
    bool truth_known = false;
    if (!cfg.data_path.empty()) {
        ds = io::read_dataset_csv(cfg.data_path);
    } else {
        ds = sample_dataset(make_signal(cfg), ThresholdModel{cfg.d, cfg.sigma},
                            cfg.nx.front(), cfg.seed, false);
        truth_known = true;
    }
    const int lags = std::min(cfg.lags, ds.dimension() - 1);
    const SampleStats stats = sample_autocorr(ds);
    RecoveryResult res =
        recover_lags(cfg, cfg.method, lag_slice(stats.r_y_lag, lags), stats.mu_hat);
    map_to_input(res, cfg.sigma);
    io::write_recovery_json(
        res, out_path(cfg, "recovery_" + method_name(res.method) + ".json"));
    if (truth_known) {
        std::vector<double> truth = make_signal(cfg).acf;
        truth.resize(lags + 1);
        std::vector<double> est{res.r0_hat};
        est.insert(est.end(), res.r_hat.begin(), res.r_hat.end());
        io::write_lag_table_csv(
            truth, est,
            out_path(cfg, "recovery_" + method_name(res.method) + "_lags.csv"));
    }
    return 0;
}

int run_benchmark(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<Method> methods{Method::pade_fast, Method::gauss_legendre,
                                Method::monte_carlo};
    if (cfg.include_full_pa) methods.push_back(Method::pade_full);

    std::ofstream out(out_path(cfg, "benchmark.csv"));
    if (!out) throw std::runtime_error("cannot open benchmark.csv for writing");
    out.precision(17);
    out << "method,N_x,mse,nmse_r0,wall_time_s\n";

    const SignalModel sig = make_signal(cfg);
    std::vector<double> truth{sig.acf.begin() + 1, sig.acf.begin() + 1 + cfg.lags};
    for (const Method method : methods) {
        for (const int nx : cfg.nx) {
            std::vector<std::vector<double>> truth_tbl, est_tbl;
            double nmse_sum = 0.0, time_sum = 0.0;
            for (int e = 0; e < cfg.trials; ++e) {
                const std::uint64_t seed = cfg.seed + 1000ull * e;
                const SignDataset ds = sample_dataset(
                    sig, ThresholdModel{cfg.d, cfg.sigma}, nx, seed, false);
                const SampleStats stats = sample_autocorr(ds);
                ExperimentConfig trial = cfg;
                trial.seed = seed;
                RecoveryResult res = recover_lags(
                    trial, method, lag_slice(stats.r_y_lag, cfg.lags), stats.mu_hat);
                map_to_input(res, cfg.sigma);
                truth_tbl.push_back(truth);
                est_tbl.push_back(res.r_hat);
                nmse_sum += nmse(cfg.r0, res.r0_hat);
                time_sum += res.wall_time_s;
            }
            out << method_name(method) << ',' << nx << ','
                << mse(truth_tbl, est_tbl) << ',' << nmse_sum / cfg.trials << ','
                << time_sum / cfg.trials << '\n';
        }
    }
    return 0;
}

int run_crosscorr(const ExperimentConfig& cfg) {
    cfg.validate();
    const SignalModel sig = make_signal(cfg);
    const SignDataset ds = sample_dataset(sig, ThresholdModel{cfg.d, cfg.sigma},
                                          cfg.nx.front(), cfg.seed, true);
    const SampleStats stats = sample_autocorr(ds);
    const int lags = ds.dimension() - 1;

    RecoveryResult res =
        recover_lags(cfg, cfg.method, lag_slice(stats.r_y_lag, lags), stats.mu_hat);
    map_to_input(res, cfg.sigma);

    std::vector<double> acf_hat{res.r0_hat};
    acf_hat.insert(acf_hat.end(), res.r_hat.begin(), res.r_hat.end());
    Eigen::MatrixXd r_x_hat(ds.dimension(), ds.dimension());
    for (int i = 0; i < ds.dimension(); ++i)
        for (int j = 0; j < ds.dimension(); ++j)
            r_x_hat(i, j) = acf_hat[std::abs(i - j)];

    const Eigen::MatrixXd r_ytau = sample_crosscorr(ds, CrossTarget::thresholds);
    const Eigen::MatrixXd estimate =
        recover_crosscorr(r_ytau, r_x_hat, cfg.sigma, res.p0_star, cfg.d);
    const Eigen::MatrixXd oracle = sample_crosscorr(ds, CrossTarget::inputs);

    const std::string tag = method_name(res.method);
    io::write_matrix_csv(estimate, cfg.d, cfg.sigma, res.p0_star,
                         out_path(cfg, "crosscorr_" + tag + "_matrix.csv"));

    const std::vector<double> est_lag = diag_means(estimate);
    const std::vector<double> sample_lag = diag_means(oracle);
    std::ofstream out(out_path(cfg, "crosscorr_" + tag + ".csv"));
    if (!out) throw std::runtime_error("cannot open crosscorr csv for writing");
    out.precision(17);
    out << "lag,r_yx_sample,r_yx_bussgang\n";
    for (std::size_t l = 0; l < est_lag.size(); ++l)
        out << l << ',' << sample_lag[l] << ',' << est_lag[l] << '\n';
    return 0;
}

}  // namespace onebit
