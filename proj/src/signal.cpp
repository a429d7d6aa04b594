#include "onebit/signal.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "onebit/rng.hpp"

namespace onebit {

std::vector<double> ar1_acf(double rho, double r0, int max_lag) {
    if (!(std::abs(rho) < 1.0))
        throw std::invalid_argument("ar1_acf: |rho| must be < 1");
    if (!(r0 > 0.0)) throw std::invalid_argument("ar1_acf: r0 must be positive");
    if (max_lag < 0) throw std::invalid_argument("ar1_acf: negative lag count");
    std::vector<double> acf(max_lag + 1);
    double v = r0;
    for (int l = 0; l <= max_lag; ++l) {
        acf[l] = v;
        v *= rho;
    }
    return acf;
}

namespace {

Eigen::LLT<Eigen::MatrixXd> cholesky_with_jitter(const Eigen::MatrixXd& t,
                                                 double r0) {
    const int n = static_cast<int>(t.rows());
    Eigen::MatrixXd jittered = t;
    jittered.diagonal().array() += 1e-10 * r0;
    Eigen::LLT<Eigen::MatrixXd> llt(jittered);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument(
            "non-PSD signal model: Toeplitz covariance failed the Cholesky gate");
    (void)n;
    return llt;
}

}  // namespace

Eigen::MatrixXd toeplitz_from_acf(const std::vector<double>& acf) {
    if (acf.empty()) throw std::invalid_argument("toeplitz_from_acf: empty ACF");
    const int n = static_cast<int>(acf.size());
    Eigen::MatrixXd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = acf[std::abs(i - j)];
    cholesky_with_jitter(t, acf[0]);
    return t;
}

SignDataset sample_dataset(const SignalModel& sig, const ThresholdModel& thr,
                           int n_snapshots, std::uint64_t seed,
                           bool retain_inputs) {
    if (n_snapshots < 1)
        throw std::invalid_argument("sample_dataset: need at least one snapshot");
    if (thr.sigma_diag < 0.0)
        throw std::invalid_argument("sample_dataset: sigma_diag must be >= 0");
    const int n = sig.dimension();
    const Eigen::MatrixXd t = toeplitz_from_acf(sig.acf);
    const Eigen::MatrixXd chol = cholesky_with_jitter(t, sig.acf[0]).matrixL();
    const double tau_std = std::sqrt(thr.sigma_diag);

    SignDataset ds;
    ds.seed = seed;
    ds.d = thr.d;
    ds.sigma_diag = thr.sigma_diag;
    ds.y.resize(n, n_snapshots);
    ds.tau.resize(n, n_snapshots);
    Eigen::MatrixXd x(n, n_snapshots);

    Eigen::VectorXd z(n);
    for (int k = 0; k < n_snapshots; ++k) {
        RandomStream rng(seed, static_cast<std::uint64_t>(k));
        for (int i = 0; i < n; ++i) z(i) = rng.normal();
        x.col(k) = chol * z;
        for (int i = 0; i < n; ++i) ds.tau(i, k) = thr.d + tau_std * rng.normal();
        for (int i = 0; i < n; ++i)
            ds.y(i, k) = x(i, k) - ds.tau(i, k) >= 0.0 ? 1.0 : -1.0;
    }
    if (retain_inputs) ds.x = std::move(x);
    return ds;
}

SampleStats sample_autocorr(const SignDataset& ds) {
    const int n = ds.dimension();
    const double nx = static_cast<double>(ds.snapshots());
    SampleStats stats;
    stats.r_y_hat = ds.y * ds.y.transpose() / nx;
    stats.r_y_lag.resize(n);
    for (int l = 0; l < n; ++l)
        stats.r_y_lag[l] = stats.r_y_hat.diagonal(l).mean();
    stats.mu_hat = sample_mean(ds);
    return stats;
}

double sample_mean(const SignDataset& ds) { return ds.y.mean(); }

Eigen::MatrixXd sample_crosscorr(const SignDataset& ds, CrossTarget target) {
    const double nx = static_cast<double>(ds.snapshots());
    if (target == CrossTarget::thresholds)
        return ds.y * ds.tau.transpose() / nx;
    if (!ds.x.has_value())
        throw std::logic_error("sample_crosscorr: inputs were not retained");
    return ds.y * ds.x->transpose() / nx;
}

}  // namespace onebit
