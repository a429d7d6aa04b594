#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "onebit/arcsine.hpp"

// Pade approximation engine: moment matching through the Hankel linear
// system, piecewise rational approximation of the two integrand functions
// on [0, pi/8] / [pi/8, 3pi/8] / [3pi/8, pi/2], and closed-form integration
// of the approximants to build the analytic forward model h_s.
namespace onebit {

/// Taylor coefficients c_0..c_order of f about x0 (c_n = f^(n)(x0)/n!),
/// by central finite differences with two Richardson refinement levels over
/// steps {h0, 2 h0, 4 h0}. order <= 4. Throws on non-finite evaluations.
std::vector<double> taylor_coeffs(const std::function<double(double)>& f,
                                  double x0, int order, double h0 = 1e-2);

/// Rational [L/M] approximant in the local variable u = theta - expansion_point.
struct PadeApproximant {
    std::vector<double> num;  // a_0..a_L
    std::vector<double> den;  // b_0..b_M with b_0 = 1
    double expansion_point = 0.0;

    double eval_local(double u) const;
    double eval(double theta) const { return eval_local(theta - expansion_point); }

    /// True if the denominator has a real root inside [u_lo, u_hi] (local).
    bool denominator_root_in(double u_lo, double u_hi) const;
};

/// Moment matching: coefficients from the Hankel system plus backsubstitution.
/// Requires c.size() == L + M + 1. An all-zero tail (c_1..c_{L+M} ~ 0) yields
/// the constant approximant c_0; otherwise an ill-conditioned Hankel matrix
/// (condition estimate above 1e12) throws a degeneracy error.
PadeApproximant pade_from_taylor(const std::vector<double>& c, int L, int M,
                                 double expansion_point = 0.0);

enum class OuterInterval { low, high };  // [0, pi/8] and [3pi/8, pi/2]

/// Closed-form integral of a [1/2] approximant over its outer interval.
/// All three quadratic-denominator discriminant cases are handled
/// (complex pair, distinct real roots, repeated root).
double integrate_outer(const PadeApproximant& ap, OuterInterval interval);

/// Closed-form integral of the [2/2] approximant over [pi/8, 3pi/8].
double integrate_middle(const PadeApproximant& ap);

struct PiecewiseModel {
    // pieces[0] = low [1/2] about 0, pieces[1] = middle [2/2] about pi/4,
    // pieces[2] = high [1/2] about pi/2; first triple approximates d2, the
    // second d1.
    std::array<PadeApproximant, 3> d2_pieces;
    std::array<PadeApproximant, 3> d1_pieces;
    // Set when a denominator root falls inside the assigned interval; h_s
    // then integrates the underlying integrand numerically on that piece.
    std::array<bool, 3> d2_fallback{false, false, false};
    std::array<bool, 3> d1_fallback{false, false, false};
    LagParams params;
    double d = 0.0;
    bool q_bar_variant = false;
};

/// Builds the six approximants for (p0, p_l, d). Requires d != 0 (the
/// integrands vanish identically at d = 0 and h_s short-circuits).
/// use_q_bar selects the two-exponential Q approximation inside d1, the
/// construction the source material describes; the default targets the
/// exact-Q integrand, which is what keeps h_s within its accuracy budget.
PiecewiseModel build_piecewise(const LagParams& p, double d, bool use_q_bar = false);

/// Analytic forward model: prefactor * (closed term + piecewise integrals
/// of d2 minus those of d1) - 1. Values escaping [-1.05, 1.05] signal
/// approximation breakdown and throw.
double h_s(const LagParams& p, double d, bool use_q_bar = false);
double h_s(const PiecewiseModel& model);

/// Debug dump of approximant coefficients, one row per piece:
/// piece,a0,a1,a2,b0,b1,b2
void dump_piecewise_csv(const PiecewiseModel& model, const std::string& path);

}  // namespace onebit
