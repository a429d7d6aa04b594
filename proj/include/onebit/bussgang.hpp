#pragma once

#include <Eigen/Dense>

// Classical and threshold-modified Bussgang laws: the constants C, C1, C2
// and cross-correlation recovery between the input and the one-bit output.
namespace onebit {

struct BussgangConstants {
    double c1 = 0.0;  // > 0 for p0 > 0; even in d
    double c2 = 0.0;  // <= 0 for d >= 0; odd in d
    double p0 = 0.0;
    double d = 0.0;
};

/// Classical Bussgang constant for the sign nonlinearity: sqrt(2/pi) / sqrt(r0).
double c_classical(double r0);

/// Closed-form C1, C2 for a sign quantizer with threshold mean d and
/// effective variance p0. At d = 0 this reduces exactly to the classical
/// law (c1 = c_classical(p0), c2 = 0).
BussgangConstants constants(double p0, double d);

/// Scalar cross-correlation law E{sign(w_i) w_j} = C1 p_l - C2 d (p0 - p_l).
double scalar_yw(double p0, double p_l, double d);

/// Cross-correlation matrix between the one-bit output and the input:
/// R_yx = R_ytau + C1 (R_x + Sigma) + C2 d (R_x + Sigma - p0 U), U all-ones,
/// Sigma = sigma_diag * I.
Eigen::MatrixXd recover_crosscorr(const Eigen::MatrixXd& r_ytau_hat,
                                  const Eigen::MatrixXd& r_x_hat,
                                  double sigma_diag, double p0, double d);

}  // namespace onebit
