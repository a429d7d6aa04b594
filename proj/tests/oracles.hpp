#pragma once

// Test-side oracles, deliberately independent of the library's numerics:
// adaptive Simpson quadrature and brute-force Monte-Carlo samplers built on
// the standard <random> engines.

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline double simpson_step(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double simpson_recurse(const std::function<double(double)>& f, double a,
                              double b, double fa, double fm, double fb,
                              double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double flm = f(0.5 * (a + m));
    const double frm = f(0.5 * (m + b));
    const double left = simpson_step(f, a, m, fa, flm, fm);
    const double right = simpson_step(f, m, b, fm, frm, fb);
    if (std::abs(left + right - whole) <= 15.0 * tol || depth > 50)
        return left + right + (left + right - whole) / 15.0;
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

/// Adaptive Simpson integral of f over [a, b] to absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson_recurse(f, a, b, fa, fm, fb, simpson_step(f, a, b, fa, fm, fb),
                           tol, 0);
}

struct MeanAndError {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Mean and standard error of g(w_i, w_j) over n draws of the bivariate
/// normal with mean (-d, -d), variance p0 and covariance p_l.
inline MeanAndError bivariate_mc(double p0, double p_l, double d, long n,
                                 const std::function<double(double, double)>& g,
                                 unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double rho = p_l / p0;
    const double s = std::sqrt(p0);
    const double t = std::sqrt(1.0 - rho * rho);
    double sum = 0.0, sum2 = 0.0;
    for (long k = 0; k < n; ++k) {
        const double z1 = normal(rng);
        const double z2 = normal(rng);
        const double wi = -d + s * z1;
        const double wj = -d + s * (rho * z1 + t * z2);
        const double v = g(wi, wj);
        sum += v;
        sum2 += v * v;
    }
    MeanAndError out;
    out.mean = sum / static_cast<double>(n);
    const double var = sum2 / static_cast<double>(n) - out.mean * out.mean;
    out.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    return out;
}

/// E{sign(w_i) sign(w_j)} with sign(0) := 1.
inline MeanAndError sign_product_mc(double p0, double p_l, double d, long n,
                                    unsigned seed) {
    return bivariate_mc(p0, p_l, d, n,
                        [](double wi, double wj) {
                            const double si = wi >= 0.0 ? 1.0 : -1.0;
                            const double sj = wj >= 0.0 ? 1.0 : -1.0;
                            return si * sj;
                        },
                        seed);
}

/// E{sign(w_i) w_j}.
inline MeanAndError sign_cross_mc(double p0, double p_l, double d, long n,
                                  unsigned seed) {
    return bivariate_mc(p0, p_l, d, n,
                        [](double wi, double wj) {
                            return (wi >= 0.0 ? 1.0 : -1.0) * wj;
                        },
                        seed);
}

/// Taylor coefficients of a rational function about its expansion point via
/// the division recurrence; exact up to rounding, no finite differences.
inline std::vector<double> rational_series(const std::vector<double>& num,
                                           const std::vector<double>& den,
                                           int order) {
    std::vector<double> c(order + 1, 0.0);
    for (int j = 0; j <= order; ++j) {
        double a = j < static_cast<int>(num.size()) ? num[j] : 0.0;
        for (int i = 1; i < static_cast<int>(den.size()) && i <= j; ++i)
            a -= den[i] * c[j - i];
        c[j] = a / den[0];
    }
    return c;
}

}  // namespace oracle
