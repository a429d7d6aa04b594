#pragma once

#include <vector>

// Scalar special functions used throughout the library. All routines are
// pure, reentrant and target 1e-10 absolute error unless noted.
namespace onebit::special {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

/// Gaussian tail probability Q(x) = (1/sqrt(2*pi)) int_x^inf exp(-z^2/2) dz.
double q(double x);

/// Two-exponential approximation of Q for x > 0:
/// (1/12) exp(-x^2/2) + (1/4) exp(-2 x^2/3). Throws for x <= 0.
double q_bar(double x);

/// Inverse of q on (0,1): returns x with |q(x) - p| <= tol. Bracketed on
/// [-12, 12] (bisection, then Newton polish). p = 0.5 returns exactly 0.
double q_inv(double p, double tol = 1e-12);

double erf(double x);
double erfc(double x);

/// Upper incomplete gamma for the two orders the library needs:
/// Gamma(1, x) = exp(-x), Gamma(1/2, x) = sqrt(pi) * erfc(sqrt(x)).
/// Any other s throws.
double inc_gamma(double s, double x);

struct GaussLegendreRule {
    int n = 0;
    std::vector<double> nodes;    // ascending in (-1, 1)
    std::vector<double> weights;  // positive, sum = 2
};

/// Nodes and weights of the n-point Gauss-Legendre rule on (-1, 1),
/// 1 <= n <= 64. Newton iteration from Chebyshev-angle seeds, converged
/// to 1e-14; node symmetry about 0 is enforced exactly.
GaussLegendreRule legendre_nodes_weights(int n);

}  // namespace onebit::special
