#include "pendmel/oracle.hpp"

#include "pendmel/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pendmel::oracle {

namespace {

constexpr double pi = std::numbers::pi;

// Abscissas beyond this t have weights far below double resolution.
constexpr double t_max = 4.0;

void check_energy(Region region, double h)
{
    const bool ok = is_rotary(region) ? h > 2.0 && std::isfinite(h) : h > 0.0 && h < 2.0;
    if (!ok)
        throw DomainError("h = " + std::to_string(h) + " is outside the " + std::string(to_string(region))
                          + " region");
}

// h - 1 + cos x on the oscillatory region, with x measured from the turning
// point alpha by delta = alpha - x >= 0 when it is small.
struct OscillatoryLevel {
    double h;
    double alpha;
    double sin_alpha;

    explicit OscillatoryLevel(double h_)
        : h(h_), alpha(2 * std::asin(std::sqrt(h_ / 2))), sin_alpha(std::sqrt(h_ * (2 - h_)))
    {
    }

    double at(double x, double delta) const
    {
        if (delta < 0.25 * alpha) {
            const double s = std::sin(delta / 2);
            return 2 * (h - 1) * s * s + sin_alpha * std::sin(delta);
        }
        return h - 1 + std::cos(x);
    }
};

// h - 1 + cos x on the rotary region, with delta = pi - |x|.
double rotary_level(double h, double x, double delta)
{
    if (delta < 0.5) {
        const double s = std::sin(delta / 2);
        return h - 2 + 2 * s * s;
    }
    return h - 1 + std::cos(x);
}

}  // namespace

QuadratureResult tanh_sinh(const Integrand& f, double a, double b, double tol)
{
    if (!(a < b))
        throw ArgumentError("tanh_sinh needs a < b");
    const double half = (b - a) / 2;
    const double mid = (a + b) / 2;

    // Sum over abscissas t = k * step for the k selected by `odd_only`.
    auto accumulate = [&](double step, bool odd_only, double& sum, double& abs_sum) {
        const int count = static_cast<int>(t_max / step);
        for (int k = odd_only ? 1 : 0; k <= count; k += odd_only ? 2 : 1) {
            const double t = k * step;
            const double u = pi / 2 * std::sinh(t);
            const double cu = std::cosh(u);
            const double weight = pi / 2 * std::cosh(t) / (cu * cu);
            // distance of the node from either end of [-1, 1]
            const double gap = 1 / (std::exp(u) * cu);
            const double x = std::tanh(u);
            if (gap == 0)
                break;
            const double right = f(mid + half * x, half * (1 + x), half * gap);
            sum += weight * right;
            abs_sum += weight * std::abs(right);
            if (k != 0) {
                const double left = f(mid - half * x, half * gap, half * (1 + x));
                sum += weight * left;
                abs_sum += weight * std::abs(left);
            }
        }
    };

    double step = 1.0;
    double sum = 0;
    double abs_sum = 0;
    accumulate(step, false, sum, abs_sum);
    double previous = half * step * sum;
    for (int level = 1; level <= max_level; ++level) {
        step /= 2;
        accumulate(step, true, sum, abs_sum);
        const double value = half * step * sum;
        const double l1 = half * step * abs_sum;
        const double error = std::abs(value - previous);
        if (level >= 3 && error <= tol * l1)
            return {value, error, l1, level};
        previous = value;
    }
    throw NoConvergenceError("tanh-sinh quadrature did not reach the requested tolerance by level "
                             + std::to_string(max_level));
}

QuadratureResult quad_I(int n, int r, Region region, double h, double tol)
{
    if (n < 0 || r < 0)
        throw ArgumentError("quad_I needs n, r >= 0");
    check_energy(region, h);
    const double sign = region == Region::RotaryMinus && r % 2 == 1 ? -1.0 : 1.0;
    auto integrand = [=](double cos_x, double level) {
        return sign * std::pow(cos_x, n) * std::pow(std::sqrt(std::max(level, 0.0)), r);
    };
    if (is_rotary(region)) {
        return tanh_sinh(
            [&](double x, double, double right) { return integrand(std::cos(x), rotary_level(h, x, right)); }, 0,
            pi, tol);
    }
    const OscillatoryLevel osc(h);
    return tanh_sinh([&](double x, double, double right) { return integrand(std::cos(x), osc.at(x, right)); }, 0,
                     osc.alpha, tol);
}

QuadratureResult quad_melnikov(const Perturbation& p, Region region, double h, double tol)
{
    check_energy(region, h);
    auto branch_sum = [&](double x, double level, double branch) {
        const double y = branch * std::sqrt(2 * std::max(level, 0.0));
        double acc = 0;
        for (const auto& [s, q] : p.terms)
            acc += q(x) * std::pow(y, s);
        return acc;
    };
    if (is_rotary(region)) {
        const double branch = region == Region::RotaryPlus ? 1.0 : -1.0;
        return tanh_sinh(
            [&](double x, double left, double right) {
                return branch_sum(x, rotary_level(h, x, std::min(left, right)), branch);
            },
            -pi, pi, tol);
    }
    // Upper branch traversed left to right, lower branch right to left.
    const OscillatoryLevel osc(h);
    return tanh_sinh(
        [&](double x, double left, double right) {
            const double level = osc.at(std::abs(x), std::min(left, right));
            return branch_sum(x, level, 1.0) - branch_sum(x, level, -1.0);
        },
        -osc.alpha, osc.alpha, tol);
}

}  // namespace pendmel::oracle
