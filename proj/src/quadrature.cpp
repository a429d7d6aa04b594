#include "onebit/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "onebit/special.hpp"

namespace onebit {

namespace {

double gauss_segment(const special::GaussLegendreRule& rule,
                     const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < rule.n; ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

struct Integrator {
    const std::function<double(double)>& f;
    const special::GaussLegendreRule& g7;
    const special::GaussLegendreRule& g15;

    double recurse(double a, double b, double tol, int depth) const {
        const double coarse = gauss_segment(g7, f, a, b);
        const double fine = gauss_segment(g15, f, a, b);
        if (std::abs(fine - coarse) <= tol || b - a < 1e-14)
            return fine;
        if (depth >= 40)
            throw std::runtime_error("integrate_adaptive: depth limit exceeded");
        const double mid = 0.5 * (a + b);
        return recurse(a, mid, 0.5 * tol, depth + 1) +
               recurse(mid, b, 0.5 * tol, depth + 1);
    }
};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
    if (a == b) return 0.0;
    static const special::GaussLegendreRule g7 = special::legendre_nodes_weights(7);
    static const special::GaussLegendreRule g15 = special::legendre_nodes_weights(15);
    const Integrator integ{f, g7, g15};
    return integ.recurse(a, b, tol, 0);
}

}  // namespace onebit
