#include "onebit/recovery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "onebit/pade.hpp"
#include "onebit/quad_models.hpp"
#include "onebit/rng.hpp"
#include "onebit/special.hpp"

namespace onebit {

namespace {

constexpr double kCriterionFloor = -1380.0;
constexpr double kFeasMargin = 1e-6;  // relative margin keeping |p_l| < p0

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Forward evaluator for a fixed d; breakdown exceptions surface as +inf so a
// solver probing an extreme point keeps running instead of aborting.
struct Forward {
    Method method;
    double d;
    GLRule gl;
    McNodes mc;

    static Forward make(Method m, double d, const SolveOptions& opts) {
        Forward f{m, d, {}, {}};
        if (m == Method::gauss_legendre) f.gl = GLRule::make(opts.n_q);
        if (m == Method::monte_carlo) f.mc = McNodes::draw(opts.n_m, opts.seed);
        return f;
    }

    double operator()(double p0, double p_l) const {
        const LagParams p{p0, p_l};
        switch (method) {
            case Method::gauss_legendre:
                return j_s(p, d, gl);
            case Method::monte_carlo:
                return f_s(p, d, mc);
            default:
                return h_s(p, d);
        }
    }

    double safe_criterion(double r_y, double p0, double p_l) const {
        try {
            return log_residual_criterion((*this)(p0, p_l), r_y);
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    }
};

struct Point {
    double p0, p_l;
};

Point project(Point x) {
    x.p0 = std::max(x.p0, 1e-8);
    const double bound = x.p0 * (1.0 - kFeasMargin);
    x.p_l = std::clamp(x.p_l, -bound, bound);
    return x;
}

}  // namespace

Method method_from_string(const std::string& name) {
    if (name == "pade_full") return Method::pade_full;
    if (name == "pade_fast") return Method::pade_fast;
    if (name == "gauss_legendre") return Method::gauss_legendre;
    if (name == "monte_carlo") return Method::monte_carlo;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected pade_full, pade_fast, gauss_legendre "
                                "or monte_carlo)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::pade_full: return "pade_full";
        case Method::pade_fast: return "pade_fast";
        case Method::gauss_legendre: return "gauss_legendre";
        case Method::monte_carlo: return "monte_carlo";
    }
    return "?";
}

double estimate_p0(double mu_hat, double d) {
    if (!(mu_hat > -1.0 && mu_hat < 1.0))
        throw std::invalid_argument("estimate_p0: mu_hat must lie in (-1, 1)");
    if (std::abs(d) <= 1e-8 || std::abs(mu_hat) <= 1e-8)
        throw std::domain_error(
            "variance unidentifiable at this threshold mean (Q^{-1}(1/2) = 0)");
    const double x = special::q_inv(0.5 * (mu_hat + 1.0), 1e-13);
    const double r = d / x;
    return r * r;
}

double log_residual_criterion(double forward_value, double r_y_l) {
    const double resid = std::abs(r_y_l - forward_value);
    if (resid < 1e-300) return kCriterionFloor;
    return 2.0 * std::log(resid);
}

double criterion(Method forward, double r_y_l, double p0, double p_l, double d,
                 const SolveOptions& opts) {
    const Forward f = Forward::make(forward, d, opts);
    return log_residual_criterion(f(p0, p_l), r_y_l);
}

double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double tol) {
    constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double brent_minimize(const std::function<double(double)>& f, double lo,
                      double hi, double tol) {
    // golden section with parabolic interpolation steps when they help
    constexpr double cgold = 0.3819660112501051;
    double a = lo, b = hi;
    double x = a + cgold * (b - a), w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double e = 0.0, dstep = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double m = 0.5 * (a + b);
        const double tol1 = tol * 0.5 + 1e-15 * std::abs(x);
        if (std::abs(x - m) <= 2.0 * tol1 - 0.5 * (b - a)) break;
        bool parabolic_ok = false;
        if (std::abs(e) > tol1) {
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_old = e;
            e = dstep;
            if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
                p < q * (b - x)) {
                dstep = p / q;
                const double u = x + dstep;
                if (u - a < 2.0 * tol1 || b - u < 2.0 * tol1)
                    dstep = (m > x) ? tol1 : -tol1;
                parabolic_ok = true;
            }
        }
        if (!parabolic_ok) {
            e = (x < m) ? b - x : a - x;
            dstep = cgold * e;
        }
        const double u =
            (std::abs(dstep) >= tol1) ? x + dstep : x + (dstep > 0 ? tol1 : -tol1);
        const double fu = f(u);
        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return x;
}

RecoveryResult solve_fast(Method forward, const std::vector<double>& r_y_lags,
                          double mu_hat, double d, const SolveOptions& opts) {
    if (r_y_lags.empty())
        throw std::invalid_argument("solve_fast: no lags to recover");
    const auto t0 = Clock::now();
    const double p0s = estimate_p0(mu_hat, d);
    const double bound = p0s * (1.0 - kFeasMargin);
    const Forward fwd = Forward::make(
        forward == Method::pade_full ? Method::pade_fast : forward, d, opts);

    const auto minimize = [&](const std::function<double(double)>& f, double lo,
                              double hi) {
        return opts.use_parabolic ? brent_minimize(f, lo, hi, opts.golden_tol)
                                  : golden_section_minimize(f, lo, hi, opts.golden_tol);
    };

    RecoveryResult res;
    res.method = forward == Method::pade_full ? Method::pade_fast : forward;
    res.p0_star = p0s;
    res.seed = opts.seed;
    for (const double r_y : r_y_lags) {
        const auto crit = [&](double p_l) { return fwd.safe_criterion(r_y, p0s, p_l); };
        double best_x;
        if (res.method == Method::pade_fast) {
            // the analytic fast criterion stays multi-modal: 8 bracket splits
            best_x = -bound;
            double best_v = std::numeric_limits<double>::infinity();
            for (int k = 0; k < 8; ++k) {
                const double lo = -bound + (2.0 * bound) * k / 8.0;
                const double hi = -bound + (2.0 * bound) * (k + 1) / 8.0;
                const double x = minimize(crit, lo, hi);
                const double v = crit(x);
                if (v < best_v) {
                    best_v = v;
                    best_x = x;
                }
            }
        } else {
            best_x = minimize(crit, -bound, bound);
        }
        res.p_hat.push_back(best_x);
        res.residuals.push_back(crit(best_x));
    }
    res.wall_time_s = elapsed_s(t0);
    return res;
}

RecoveryResult solve_full_pa(const std::vector<double>& r_y_lags, double d,
                             const SolveOptions& opts) {
    if (r_y_lags.empty())
        throw std::invalid_argument("solve_full_pa: no lags to recover");
    if (std::abs(d) <= 1e-8)
        throw std::domain_error(
            "solve_full_pa: variance unidentifiable at d = 0; the criterion "
            "depends only on p_l/p0 (use the Lemma-1 fast path)");
    const auto t0 = Clock::now();
    const Forward fwd = Forward::make(Method::pade_fast, d, opts);

    RecoveryResult res;
    res.method = Method::pade_full;
    res.seed = opts.seed;
    std::vector<double> p0_by_lag;

    for (std::size_t lag = 0; lag < r_y_lags.size(); ++lag) {
        const double r_y = r_y_lags[lag];
        const auto obj = [&](const Point& x) {
            return fwd.safe_criterion(r_y, x.p0, x.p_l);
        };

        Point best{1.0, 0.0};
        double best_v = std::numeric_limits<double>::infinity();
        int converged = 0;
        std::string diag;
        for (int s = 0; s < opts.starts; ++s) {
            RandomStream rng(opts.seed, 1000 * (lag + 1) + s);
            Point x;
            x.p0 = 0.1 + 2.9 * rng.uniform();
            x.p_l = x.p0 * (2.0 * rng.uniform() - 1.0) * (1.0 - kFeasMargin);
            double fx = obj(x);
            bool ok = false;
            for (int it = 0; it < opts.max_iterations; ++it) {
                // projected central-difference gradient
                const double h0 = 1e-6 * std::max(1.0, x.p0);
                const double h1 = 1e-6 * std::max(1.0, std::abs(x.p_l));
                const double g0 = (obj(project({x.p0 + h0, x.p_l})) -
                                   obj(project({x.p0 - h0, x.p_l}))) /
                                  (2.0 * h0);
                const double g1 = (obj(project({x.p0, x.p_l + h1})) -
                                   obj(project({x.p0, x.p_l - h1}))) /
                                  (2.0 * h1);
                const double gnorm2 = g0 * g0 + g1 * g1;
                if (!std::isfinite(gnorm2) || gnorm2 == 0.0) {
                    ok = true;
                    break;
                }
                // backtracking line search (Armijo)
                double t = 1.0;
                Point xn = x;
                double fn = fx;
                while (t > 1e-14) {
                    xn = project({x.p0 - t * g0, x.p_l - t * g1});
                    fn = obj(xn);
                    if (fn <= fx - 1e-4 * t * gnorm2) break;
                    t *= 0.5;
                }
                const double step = std::hypot(xn.p0 - x.p0, xn.p_l - x.p_l);
                if (fn < fx) {
                    x = xn;
                    fx = fn;
                }
                if (step < opts.step_tol) {
                    ok = true;
                    break;
                }
            }
            if (ok) ++converged;
            else diag += "start " + std::to_string(s) + " hit iteration cap; ";
            if (fx < best_v) {
                best_v = fx;
                best = x;
            }
        }
        if (converged == 0)
            throw std::runtime_error("solve_full_pa: no start converged at lag " +
                                     std::to_string(lag + 1) + ": " + diag);
        p0_by_lag.push_back(best.p0);
        res.p_hat.push_back(best.p_l);
        res.residuals.push_back(best_v);
    }

    std::vector<double> sorted = p0_by_lag;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    res.p0_star = (n % 2 == 1) ? sorted[n / 2]
                               : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double bound = res.p0_star * (1.0 - kFeasMargin);
    for (double& pl : res.p_hat) pl = std::clamp(pl, -bound, bound);
    res.wall_time_s = elapsed_s(t0);
    return res;
}

void map_to_input(RecoveryResult& res, double sigma_diag) {
    if (res.p_hat.empty() && res.p0_star == 0.0)
        throw std::logic_error("map_to_input: recovery result not populated");
    res.r0_hat = res.p0_star - sigma_diag;
    res.r_hat = res.p_hat;  // diagonal Sigma contributes nothing off-diagonal
    res.r0_warning = !(res.r0_hat > 0.0);
}

double nmse(double r0, double r0_hat) {
    if (r0 == 0.0) throw std::invalid_argument("nmse: r0 must be nonzero");
    const double e = r0 - r0_hat;
    return e * e / (r0 * r0);
}

double mse(const std::vector<std::vector<double>>& truth,
           const std::vector<std::vector<double>>& est) {
    if (truth.size() != est.size() || truth.empty())
        throw std::invalid_argument("mse: experiment tables must match");
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t e = 0; e < truth.size(); ++e) {
        if (truth[e].size() != est[e].size())
            throw std::invalid_argument("mse: lag tables must match");
        for (std::size_t l = 0; l < truth[e].size(); ++l) {
            const double diff = truth[e][l] - est[e][l];
            sum += diff * diff;
            ++count;
        }
    }
    return sum / static_cast<double>(count);
}

}  // namespace onebit
