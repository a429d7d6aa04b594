#pragma once

#include <cstdint>
#include <vector>

#include "onebit/arcsine.hpp"
#include "onebit/special.hpp"

// Numerical forward models for the sign-autocorrelation integral:
// a Gauss-Legendre rule (j_s) and fixed-node Monte-Carlo integration (f_s).
namespace onebit {

struct GLRule {
    int n_q = 13;
    special::GaussLegendreRule rule;

    static GLRule make(int n_q = 13) { return {n_q, special::legendre_nodes_weights(n_q)}; }
};

/// Gauss-Legendre approximation of R_y(l); deterministic. With n_q = 13 it
/// matches ry_reference to ~1e-8 over the sampling regimes used here.
double j_s(const LagParams& p, double d, const GLRule& rule);

/// Monte-Carlo integration nodes, uniform on [0, pi/2]. A node set is drawn
/// once per seed and reused across every p_l evaluation inside a recovery,
/// so the optimized criterion is a fixed smooth function of p_l.
struct McNodes {
    std::vector<double> theta;
    std::uint64_t seed = 0;

    static McNodes draw(int n_m, std::uint64_t seed);
};

double f_s(const LagParams& p, double d, const McNodes& nodes);

/// Convenience overload drawing the node set internally (deterministic in seed).
double f_s(const LagParams& p, double d, int n_m, std::uint64_t seed);

}  // namespace onebit
