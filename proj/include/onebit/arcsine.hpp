#pragma once

namespace onebit {

/// Variance and lag-l autocorrelation of the effective process w = x - tau.
/// Feasibility requires |p_l| < p0 strictly; the boundary is a singularity
/// of sqrt(p0^2 - p_l^2).
struct LagParams {
    double p0 = 1.0;
    double p_l = 0.0;
};

struct IntegrandPoint {
    double alpha = 0.0;  // d (sin t + cos t) / (p0 + p_l)
    double beta = 0.0;   // (p0 - p_l sin 2t) / (2 (p0^2 - p_l^2)), > 0
};

/// Throws if |p_l| >= p0 or p0 <= 0.
void check_feasible(const LagParams& p);

IntegrandPoint alpha_beta(double theta, const LagParams& p, double d);

/// The two integrand pieces of the sign-autocorrelation integral.
/// d1 uses the exact Q by default; use_q_bar selects the two-exponential
/// approximation (only meaningful for positive alpha arguments).
/// Both throw once alpha^2/(4 beta) exceeds 700 (the exponential would
/// overflow; happens only for d far outside the sampling regimes).
double d1(double theta, const LagParams& p, double d, bool use_q_bar = false);
double d2(double theta, const LagParams& p, double d);

/// Numerically stable combined d2 - d1 with the exact Q:
/// sqrt(pi/b) * (a/2b) * exp(a^2/4b) * erf(a/(2 sqrt(b))).
double d2_minus_d1(double theta, const LagParams& p, double d);

/// Closed form of int_0^{pi/2} 1/beta dtheta:
/// sqrt(p0^2 - p_l^2) * (pi + 2 atan(p_l / sqrt(p0^2 - p_l^2))).
double closed_term(const LagParams& p);

/// exp(-d^2/(p0+p_l)) / (pi sqrt(p0^2 - p_l^2)); shared by every forward model.
double ry_prefactor(const LagParams& p, double d);

/// Reference evaluation of the sign-data autocorrelation R_y(l) as a
/// function of (p0, p_l, d), by adaptive quadrature of the full integral.
/// This is the library's ground-truth oracle for the approximate forward
/// models. tol must lie in [1e-12, 1e-6].
double ry_reference(const LagParams& p, double d, double tol = 1e-10);

/// Classical arcsine law (2/pi) asin(r_l / r0); requires |r_l| <= r0.
double arcsine_classical(double r0, double r_l);

}  // namespace onebit
