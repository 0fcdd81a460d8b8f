#pragma once

#include "pendmel/abelian.hpp"
#include "pendmel/fourier.hpp"

#include <functional>

namespace pendmel::oracle {

struct QuadratureResult {
    double value = 0;
    double error = 0;  // difference between the last two levels
    double l1 = 0;     // quadrature of |f|, the scale for the stopping test
    int levels = 0;
};

/// Integrand on [a, b], called as f(x, x - a, b - x) so that endpoint
/// singularities can be evaluated from the exact distance to the end.
using Integrand = std::function<double(double x, double from_left, double from_right)>;

inline constexpr double default_tolerance = 1e-13;
inline constexpr int max_level = 12;

/// Double-exponential (tanh-sinh) quadrature. Stops once successive
/// levels agree to tol relative to the L1 norm of the integrand; throws
/// NoConvergenceError if that has not happened by max_level.
QuadratureResult tanh_sinh(const Integrand& f, double a, double b, double tol = default_tolerance);

/// I_{n,r}(h) = int_0^alpha cos^n x (h - 1 + cos x)^(r/2) dx, with the square
/// root taken negative on RotaryMinus.
QuadratureResult quad_I(int n, int r, Region region, double h, double tol = default_tolerance);

/// Line integral of sum_s Q_s(x) y^s dx along the level H = h, with
/// y = sqrt(2 (h - 1 + cos x)): both branches of the oval on the oscillatory
/// region, a single branch over [-pi, pi] on the rotary ones.
QuadratureResult quad_melnikov(const Perturbation& p, Region region, double h, double tol = default_tolerance);

}  // namespace pendmel::oracle
