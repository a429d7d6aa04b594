#pragma once

#include <functional>

namespace onebit {

/// Adaptive quadrature of f over [a, b] to absolute tolerance tol:
/// Gauss-Kronrod-style bisection with an embedded (G7, G15) error estimate
/// per segment. Throws if the recursion depth limit is hit before the
/// tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-10);

}  // namespace onebit
