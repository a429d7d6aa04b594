#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "onebit/arcsine.hpp"

// Estimation pipelines: optimal variance from the one-bit sample mean, the
// per-lag log-residual criteria, the constrained optimizers, and the map
// from recovered effective parameters back to input statistics.
namespace onebit {

enum class Method { pade_full, pade_fast, gauss_legendre, monte_carlo };

Method method_from_string(const std::string& name);
std::string method_name(Method m);

struct RecoveryResult {
    double p0_star = 0.0;
    std::vector<double> p_hat;      // lags 1..L
    double r0_hat = 0.0;
    std::vector<double> r_hat;
    Method method = Method::gauss_legendre;
    std::vector<double> residuals;  // criterion value at each lag's optimum
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
    bool r0_warning = false;        // set when r0_hat <= 0 after variance subtraction
};

/// Optimal effective variance from the one-bit sample mean:
/// p0* = (d / Q^{-1}((mu+1)/2))^2. Throws "variance unidentifiable" when
/// mu_hat ~ 0 (division by Q^{-1}(1/2) = 0) or d ~ 0.
double estimate_p0(double mu_hat, double d);

/// log(|r_y - forward|^2), floored at -1380 once |r_y - forward| < 1e-300.
double log_residual_criterion(double forward_value, double r_y_l);

struct SolveOptions {
    int starts = 20;            // multi-start count for the full problem
    int max_iterations = 1000;  // gradient descent cap
    double step_tol = 1e-8;     // GD convergence threshold on the step norm
    double golden_tol = 1e-10;  // scalar search interval tolerance
    bool use_parabolic = false; // Brent acceleration for the scalar solves
    int n_q = 13;               // Gauss-Legendre points
    int n_m = 2000;             // Monte-Carlo nodes
    std::uint64_t seed = 1;     // multi-start and MC node seed
};

/// Criterion value for the chosen forward model at (p0, p_l).
double criterion(Method forward, double r_y_l, double p0, double p_l, double d,
                 const SolveOptions& opts = {});

/// Two-variable recovery (analytic forward model only): per lag, multi-start
/// projected gradient descent over {p0 >= eps, |p_l| <= p0 - eps}; the best
/// criterion value wins and p0 is reported as the median across lags.
/// Requires |d| > 1e-8; at d = 0 the criterion depends only on p_l/p0 and the
/// variance is unidentifiable (use the Lemma-1 fast path instead).
RecoveryResult solve_full_pa(const std::vector<double>& r_y_lags, double d,
                             const SolveOptions& opts = {});

/// Fast path: p0* fixed by estimate_p0, then a scalar solve per lag on
/// [-p0*+eps, p0*-eps]. Golden-section for the Gauss-Legendre and
/// Monte-Carlo criteria (unimodal); multi-start golden-section over 8
/// bracket splits for the analytic model, whose fast criterion stays
/// multi-modal.
RecoveryResult solve_fast(Method forward, const std::vector<double>& r_y_lags,
                          double mu_hat, double d, const SolveOptions& opts = {});

/// Fills r0_hat / r_hat from the recovered effective parameters under a
/// diagonal threshold covariance: r0 = p0* - sigma_diag, r_l = p_l.
void map_to_input(RecoveryResult& res, double sigma_diag);

double nmse(double r0, double r0_hat);

/// (1/(E*L)) sum_e sum_l |truth[e][l] - est[e][l]|^2
double mse(const std::vector<std::vector<double>>& truth,
           const std::vector<std::vector<double>>& est);

/// Bounded scalar minimization helpers (exposed for tests).
double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double tol);
double brent_minimize(const std::function<double(double)>& f, double lo,
                      double hi, double tol);

}  // namespace onebit
