#include "onebit/arcsine.hpp"

#include <cmath>
#include <stdexcept>

#include "onebit/quadrature.hpp"
#include "onebit/special.hpp"

namespace onebit {

using special::kPi;

void check_feasible(const LagParams& p) {
    if (!(p.p0 > 0.0))
        throw std::invalid_argument("effective variance p0 must be positive");
    if (!(std::abs(p.p_l) < p.p0))
        throw std::invalid_argument("effective autocorrelation requires |p_l| < p0");
}

IntegrandPoint alpha_beta(double theta, const LagParams& p, double d) {
    check_feasible(p);
    IntegrandPoint pt;
    pt.alpha = d * (std::sin(theta) + std::cos(theta)) / (p.p0 + p.p_l);
    pt.beta = (p.p0 - p.p_l * std::sin(2.0 * theta)) /
              (2.0 * (p.p0 * p.p0 - p.p_l * p.p_l));
    return pt;
}

namespace {

double exponent_or_throw(const IntegrandPoint& pt) {
    const double e = pt.alpha * pt.alpha / (4.0 * pt.beta);
    if (e > 700.0)
        throw std::domain_error(
            "exponent overflow - d too large for this (p0,p_l)");
    return e;
}

}  // namespace

double d1(double theta, const LagParams& p, double d, bool use_q_bar) {
    const IntegrandPoint pt = alpha_beta(theta, p, d);
    if (pt.alpha == 0.0) return 0.0;
    const double e = exponent_or_throw(pt);
    const double arg = pt.alpha / std::sqrt(2.0 * pt.beta);
    const double qv = use_q_bar ? special::q_bar(arg) : special::q(arg);
    return std::sqrt(kPi / pt.beta) * (pt.alpha / pt.beta) * qv * std::exp(e);
}

double d2(double theta, const LagParams& p, double d) {
    const IntegrandPoint pt = alpha_beta(theta, p, d);
    if (pt.alpha == 0.0) return 0.0;
    const double e = exponent_or_throw(pt);
    return std::sqrt(kPi / pt.beta) * (pt.alpha / (2.0 * pt.beta)) * std::exp(e);
}

double d2_minus_d1(double theta, const LagParams& p, double d) {
    const IntegrandPoint pt = alpha_beta(theta, p, d);
    if (pt.alpha == 0.0) return 0.0;
    const double e = exponent_or_throw(pt);
    const double root_beta = std::sqrt(pt.beta);
    return std::sqrt(kPi / pt.beta) * (pt.alpha / (2.0 * pt.beta)) *
           std::exp(e) * special::erf(pt.alpha / (2.0 * root_beta));
}

double closed_term(const LagParams& p) {
    check_feasible(p);
    const double s = std::sqrt(p.p0 * p.p0 - p.p_l * p.p_l);
    return s * (kPi + 2.0 * std::atan(p.p_l / s));
}

double ry_prefactor(const LagParams& p, double d) {
    check_feasible(p);
    return std::exp(-d * d / (p.p0 + p.p_l)) /
           (kPi * std::sqrt(p.p0 * p.p0 - p.p_l * p.p_l));
}

double ry_reference(const LagParams& p, double d, double tol) {
    check_feasible(p);
    if (!(tol >= 1e-12 && tol <= 1e-6))
        throw std::invalid_argument("ry_reference: tol must be in [1e-12, 1e-6]");
    if (d == 0.0) return arcsine_classical(p.p0, p.p_l);
    const double integral = integrate_adaptive(
        [&](double t) { return d2_minus_d1(t, p, d); }, 0.0, 0.5 * kPi, tol);
    double v = ry_prefactor(p, d) * (closed_term(p) + integral) - 1.0;
    if (v > 1.0 && v < 1.0 + 1e-9) v = 1.0;
    if (v < -1.0 && v > -1.0 - 1e-9) v = -1.0;
    return v;
}

double arcsine_classical(double r0, double r_l) {
    if (!(r0 > 0.0)) throw std::invalid_argument("arcsine law: r0 must be positive");
    if (std::abs(r_l) > r0)
        throw std::invalid_argument("arcsine law: |r_l| must not exceed r0");
    return 2.0 / kPi * std::asin(r_l / r0);
}

}  // namespace onebit
