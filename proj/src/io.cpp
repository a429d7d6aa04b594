#include "onebit/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

namespace onebit::io {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    return out;
}

std::map<std::string, std::string> parse_meta(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::string body = line;
    if (!body.empty() && body[0] == '#') body.erase(0, 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        const auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(key);
        trim(val);
        kv[key] = val;
    }
    return kv;
}

}  // namespace

void write_dataset_csv(const SignDataset& ds, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "# N=" << ds.dimension() << ",N_x=" << ds.snapshots()
        << ",seed=" << ds.seed << ",d=" << ds.d << ",sigma=" << ds.sigma_diag
        << '\n';
    for (int i = 0; i < ds.dimension(); ++i) {
        for (int k = 0; k < ds.snapshots(); ++k) {
            if (k) out << ',';
            out << (ds.y(i, k) > 0 ? 1 : -1);
        }
        out << '\n';
    }
}

SignDataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("dataset file missing '#' metadata line: " + path);
    const auto meta = parse_meta(line);
    const auto need = [&](const char* key) {
        const auto it = meta.find(key);
        if (it == meta.end())
            throw std::runtime_error(std::string("dataset metadata missing ") + key);
        return it->second;
    };
    const int n = std::stoi(need("N"));
    const int nx = std::stoi(need("N_x"));
    SignDataset ds;
    ds.seed = std::stoull(need("seed"));
    ds.d = std::stod(need("d"));
    ds.sigma_diag = std::stod(need("sigma"));
    ds.y.resize(n, nx);
    ds.tau.resize(0, 0);  // not serialized
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("dataset truncated at row " + std::to_string(i));
        std::stringstream ss(line);
        std::string cell;
        for (int k = 0; k < nx; ++k) {
            if (!std::getline(ss, cell, ','))
                throw std::runtime_error("dataset row too short at row " +
                                         std::to_string(i));
            const double v = std::stod(cell);
            if (v != 1.0 && v != -1.0)
                throw std::runtime_error("dataset entries must be +-1");
            ds.y(i, k) = v;
        }
    }
    return ds;
}

void write_stats_csv(const SampleStats& stats, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "# N=" << stats.r_y_lag.size() << ",mu_hat=" << stats.mu_hat << '\n';
    out << "lag,r_y_lag,mu_hat\n";
    for (std::size_t l = 0; l < stats.r_y_lag.size(); ++l)
        out << l << ',' << stats.r_y_lag[l] << ',' << stats.mu_hat << '\n';
}

void write_matrix_csv(const Eigen::MatrixXd& m, double d, double sigma,
                      double p0, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "# N=" << m.rows() << ",d=" << d << ",sigma=" << sigma
        << ",p0=" << p0 << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j);
        }
        out << '\n';
    }
}

void write_lag_table_csv(const std::vector<double>& true_r,
                         const std::vector<double>& est_r,
                         const std::string& path) {
    if (true_r.size() != est_r.size())
        throw std::invalid_argument("lag table: size mismatch");
    std::ofstream out = open_out(path);
    out << "lag,true_r,est_r\n";
    for (std::size_t l = 0; l < true_r.size(); ++l)
        out << l << ',' << true_r[l] << ',' << est_r[l] << '\n';
}

std::string recovery_to_json(const RecoveryResult& res) {
    nlohmann::ordered_json j;
    j["method"] = method_name(res.method);
    j["p0_star"] = res.p0_star;
    j["p_hat"] = res.p_hat;
    j["r0_hat"] = res.r0_hat;
    j["r_hat"] = res.r_hat;
    j["residuals"] = res.residuals;
    j["wall_time_s"] = res.wall_time_s;
    j["seed"] = res.seed;
    if (res.r0_warning) j["r0_warning"] = true;
    return j.dump(2);
}

void write_recovery_json(const RecoveryResult& res, const std::string& path) {
    std::ofstream out = open_out(path);
    out << recovery_to_json(res) << '\n';
}

}  // namespace onebit::io
