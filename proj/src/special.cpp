#include "onebit/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace onebit::special {

namespace {

// Lower-series form of erf, all terms positive so there is no alternating
// cancellation: erf(x) = (2/sqrt(pi)) x e^{-x^2} sum_n (2x^2)^n / (2n+1)!!.
double erf_series(double x) {
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    double denom = 1.0;
    for (int n = 1; n < 200; ++n) {
        denom += 2.0;
        term *= 2.0 * x2 / denom;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return 2.0 / kSqrtPi * x * std::exp(-x2) * sum;
}

// Continued fraction for erfc(x), x > 0 (Lentz evaluation):
// erfc(x) = e^{-x^2}/(x sqrt(pi)) * 1/(1 + (1/2)/x^2/(1 + (2/2)/x^2/(...)))
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = tiny, c = tiny, d = 0.0;
    const double x2 = x * x;
    for (int n = 0; n < 300; ++n) {
        const double a = (n == 0) ? 1.0 : n / 2.0 / x2;
        const double b = 1.0;
        d = b + a * d;
        if (d == 0.0) d = tiny;
        c = b + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x2) / (x * kSqrtPi) * f;
}

}  // namespace

double erf(double x) {
    if (std::abs(x) < 3.0) return erf_series(x);
    if (x >= 3.0) return 1.0 - erfc_cf(x);
    return erfc_cf(-x) - 1.0;
}

double erfc(double x) {
    if (x >= 3.0) return erfc_cf(x);
    if (x <= -3.0) return 2.0 - erfc_cf(-x);
    return 1.0 - erf_series(x);
}

double q(double x) { return 0.5 * erfc(x / kSqrt2); }

double q_bar(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("q_bar: argument must be positive");
    return std::exp(-0.5 * x * x) / 12.0 + std::exp(-2.0 * x * x / 3.0) / 4.0;
}

double q_inv(double p, double tol) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("q_inv: probability must lie in (0,1)");
    if (p == 0.5) return 0.0;
    double lo = -12.0, hi = 12.0;  // q decreasing: q(lo) ~ 1, q(hi) ~ 0
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (q(mid) > p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12) break;
    }
    double x = 0.5 * (lo + hi);
    // Newton polish; q'(x) = -phi(x)
    for (int i = 0; i < 8; ++i) {
        const double r = q(x) - p;
        if (std::abs(r) <= tol) break;
        const double phi = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
        if (phi < 1e-300) break;
        x += r / phi;
    }
    return x;
}

double inc_gamma(double s, double x) {
    if (x < 0.0) throw std::invalid_argument("inc_gamma: x must be >= 0");
    if (s == 1.0) return std::exp(-x);
    if (s == 0.5) return kSqrtPi * erfc(std::sqrt(x));
    throw std::invalid_argument("inc_gamma: only s = 1/2 and s = 1 supported");
}

GaussLegendreRule legendre_nodes_weights(int n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("legendre_nodes_weights: n must be in [1, 64]");
    GaussLegendreRule rule;
    rule.n = n;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    // Find the roots in the upper half, mirror for the lower half.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-angle seed for the i-th largest root
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // three-term recurrence for P_n(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-14) {
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace onebit::special
