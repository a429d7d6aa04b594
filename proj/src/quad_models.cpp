#include "onebit/quad_models.hpp"

#include <cmath>
#include <stdexcept>

#include "onebit/rng.hpp"

namespace onebit {

using special::kPi;

double j_s(const LagParams& p, double d, const GLRule& rule) {
    check_feasible(p);
    if (d == 0.0) return arcsine_classical(p.p0, p.p_l);
    double sum = 0.0;
    for (int i = 0; i < rule.rule.n; ++i) {
        const double theta = 0.25 * kPi * (rule.rule.nodes[i] + 1.0);
        sum += rule.rule.weights[i] * d2_minus_d1(theta, p, d);
    }
    return ry_prefactor(p, d) * (closed_term(p) + 0.25 * kPi * sum) - 1.0;
}

McNodes McNodes::draw(int n_m, std::uint64_t seed) {
    if (n_m < 1) throw std::invalid_argument("f_s: n_m must be positive");
    McNodes nodes;
    nodes.seed = seed;
    nodes.theta.reserve(n_m);
    RandomStream rng(seed);
    for (int i = 0; i < n_m; ++i) nodes.theta.push_back(rng.uniform(0.0, 0.5 * kPi));
    return nodes;
}

double f_s(const LagParams& p, double d, const McNodes& nodes) {
    check_feasible(p);
    if (nodes.theta.empty()) throw std::invalid_argument("f_s: empty node set");
    if (d == 0.0) return arcsine_classical(p.p0, p.p_l);
    double sum = 0.0;
    for (const double theta : nodes.theta) sum += d2_minus_d1(theta, p, d);
    const double n_m = static_cast<double>(nodes.theta.size());
    return ry_prefactor(p, d) * (closed_term(p) + 0.5 * kPi / n_m * sum) - 1.0;
}

double f_s(const LagParams& p, double d, int n_m, std::uint64_t seed) {
    return f_s(p, d, McNodes::draw(n_m, seed));
}

}  // namespace onebit
