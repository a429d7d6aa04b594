#include "onebit/bussgang.hpp"

#include <cmath>
#include <stdexcept>

#include "onebit/special.hpp"

namespace onebit {

using special::kPi;
using special::kSqrtPi;

double c_classical(double r0) {
    if (!(r0 > 0.0)) throw std::invalid_argument("c_classical: r0 must be positive");
    return std::sqrt(2.0 / (kPi * r0));
}

BussgangConstants constants(double p0, double d) {
    if (!(p0 > 0.0)) throw std::invalid_argument("bussgang constants: p0 must be positive");
    BussgangConstants c;
    c.p0 = p0;
    c.d = d;
    const double x = d * d / (2.0 * p0);
    // |d| keeps C1 even in d, matching its defining integral; the closed form
    // loses the sign of d inside Gamma(1/2, d^2/2p0).
    c.c1 = std::sqrt(2.0 / (kPi * p0)) * special::inc_gamma(1.0, x) -
           std::abs(d) / (kSqrtPi * p0) * (special::inc_gamma(0.5, x) - kSqrtPi);
    c.c2 = -special::erf(d / std::sqrt(2.0 * p0)) / p0;
    return c;
}

double scalar_yw(double p0, double p_l, double d) {
    const BussgangConstants c = constants(p0, d);
    return c.c1 * p_l - c.c2 * d * (p0 - p_l);
}

Eigen::MatrixXd recover_crosscorr(const Eigen::MatrixXd& r_ytau_hat,
                                  const Eigen::MatrixXd& r_x_hat,
                                  double sigma_diag, double p0, double d) {
    if (r_ytau_hat.rows() != r_x_hat.rows() || r_ytau_hat.cols() != r_x_hat.cols())
        throw std::invalid_argument("recover_crosscorr: shape mismatch");
    const BussgangConstants c = constants(p0, d);
    Eigen::MatrixXd rw = r_x_hat;
    rw.diagonal().array() += sigma_diag;
    const Eigen::MatrixXd u = Eigen::MatrixXd::Ones(rw.rows(), rw.cols());
    return r_ytau_hat + c.c1 * rw + c.c2 * d * (rw - p0 * u);
}

}  // namespace onebit
