#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

// Stationary Gaussian signal simulation against Gaussian time-varying
// thresholds, one-bit sampling, and the sample statistics the recovery
// pipeline consumes.
namespace onebit {

/// Stationary autocorrelation sequence r_0..r_{N-1}; the implied covariance
/// is the symmetric Toeplitz matrix T(i,j) = acf(|i-j|), which must be PSD.
struct SignalModel {
    std::vector<double> acf;

    int dimension() const { return static_cast<int>(acf.size()); }
};

/// Thresholds tau ~ N(1 d, sigma_diag I). sigma_diag is the diagonal value
/// of the (diagonal) threshold covariance.
struct ThresholdModel {
    double d = 0.0;
    double sigma_diag = 0.0;
};

/// AR(1)-style autocorrelation family r_l = r0 * rho^l, l = 0..max_lag.
std::vector<double> ar1_acf(double rho, double r0, int max_lag);

/// Symmetric Toeplitz matrix from an ACF, gated by a Cholesky-with-jitter
/// PSD check (jitter 1e-10 * r0). Throws for non-PSD models.
Eigen::MatrixXd toeplitz_from_acf(const std::vector<double>& acf);

struct SignDataset {
    Eigen::MatrixXd y;                  // N x N_x, entries in {-1, +1}
    Eigen::MatrixXd tau;                // threshold realizations
    std::optional<Eigen::MatrixXd> x;   // inputs, retained for oracle tests
    std::uint64_t seed = 0;
    double d = 0.0;
    double sigma_diag = 0.0;

    int dimension() const { return static_cast<int>(y.rows()); }
    int snapshots() const { return static_cast<int>(y.cols()); }
};

/// Draws n_snapshots independent snapshots x(k) ~ N(0, R_x) via the Cholesky
/// factor and tau(k) ~ N(1 d, sigma_diag I), and sets y = sign(x - tau) with
/// sign(0) := +1. Column k derives its randomness from (seed, k), so the
/// result is reproducible and column order independent.
SignDataset sample_dataset(const SignalModel& sig, const ThresholdModel& thr,
                           int n_snapshots, std::uint64_t seed,
                           bool retain_inputs = true);

struct SampleStats {
    Eigen::MatrixXd r_y_hat;       // (1/N_x) sum y(k) y(k)^T
    std::vector<double> r_y_lag;   // diagonal averages, lag 0..N-1
    double mu_hat = 0.0;
};

/// Sample autocorrelation of the sign data (divisor N_x) plus the
/// stationarity-averaged per-lag sequence.
SampleStats sample_autocorr(const SignDataset& ds);

/// Snapshot mean averaged across entries (the Lemma-1 estimator).
double sample_mean(const SignDataset& ds);

enum class CrossTarget { thresholds, inputs };

/// (1/N_x) sum y(k) v(k)^T with v the thresholds or the retained inputs.
/// Throws if inputs are requested but were not retained.
Eigen::MatrixXd sample_crosscorr(const SignDataset& ds, CrossTarget target);

}  // namespace onebit
