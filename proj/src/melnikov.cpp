#include "pendmel/melnikov.hpp"

#include "pendmel/errors.hpp"
#include "pendmel/parallel.hpp"

#include <cmath>
#include <limits>

namespace pendmel {

std::vector<PowerTerm> reduce_oscillatory(const Perturbation& p)
{
    std::vector<PowerTerm> out;
    for (const auto& [s, q] : p.terms) {
        if (s % 2 == 0)
            continue;
        RationalPoly even = q.even_part_in_cos();
        if (!even.is_zero())
            out.push_back({s, std::move(even)});
    }
    return out;
}

RotaryReduction reduce_rotary(const Perturbation& p)
{
    RotaryReduction out;
    for (const auto& [s, q] : p.terms) {
        RationalPoly even = q.even_part_in_cos();
        if (even.is_zero())
            continue;
        (s % 2 == 0 ? out.even : out.odd).push_back({s, std::move(even)});
    }
    return out;
}

namespace {

Rational power_of_two(int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i)
        out *= 2;
    return out;
}

// sum_i c_i I_{i, 2r+1} for c(u) = sum_i c_i u^i
EllipticForm odd_combination(const RationalPoly& c, int r, Region region)
{
    EllipticForm acc = zero_form(region);
    for (int i = 0; i <= c.degree(); ++i)
        if (c.coeff(i) != 0)
            acc = acc + c.coeff(i) * build_I_odd(i, r, region);
    return acc;
}

EllipticForm even_combination(const RationalPoly& c, int j, Region region)
{
    EllipticForm acc = zero_form(region);
    for (int i = 0; i <= c.degree(); ++i)
        if (c.coeff(i) != 0)
            acc = acc + c.coeff(i) * build_I_even(i, j, region);
    return acc;
}

}  // namespace

EllipticForm build_melnikov(const Perturbation& p, Region region)
{
    EllipticForm out = zero_form(region);
    if (region == Region::Oscillatory) {
        for (const auto& term : reduce_oscillatory(p)) {
            const int r = (term.power - 1) / 2;
            out = out + (4 * power_of_two(r)) * times_sqrt2(odd_combination(term.poly, r, region));
        }
        return out;
    }
    const RotaryReduction reduced = reduce_rotary(p);
    for (const auto& term : reduced.odd) {
        const int r = (term.power - 1) / 2;
        out = out + (2 * power_of_two(r)) * times_sqrt2(odd_combination(term.poly, r, region));
    }
    for (const auto& term : reduced.even) {
        const int j = term.power / 2;
        out = out + (2 * power_of_two(j)) * even_combination(term.poly, j, region);
    }
    return out;
}

int bound_theorem_a(int n, int m, Region region)
{
    if (n < 0 || m < 0)
        throw ArgumentError("bound_theorem_a needs n, m >= 0");
    if (is_rotary(region))
        return 2 * n + 2 * m + m / 2 + 2;
    // floor((m - 1)/2) with floor(-1/2) = -1
    const int half = m >= 1 ? (m - 1) / 2 : -1;
    return 2 * n + 2 * half + 1;
}

int odd_span(int s1, int s2)
{
    if (s1 < 0 || s2 < s1)
        throw ArgumentError("odd_span needs 0 <= s1 <= s2");
    const int half = (s2 - s1) / 2;
    return s1 % 2 == 0 && s2 % 2 == 0 ? half - 1 : half;
}

Bound bound_theorem_b(int n, int s1, int s2)
{
    if (n < 0)
        throw ArgumentError("bound_theorem_b needs n >= 0");
    const int r = odd_span(s1, s2);
    if (r < 0)
        return {BoundKind::Center, 0, "theorem_b"};
    if (s1 == s2)
        return {BoundKind::Finite, n, "theorem_b"};
    const int ell = s1 % 2 == 1 ? s1 : s1 + 1;
    if (2 * r < ell + 3)
        return {BoundKind::Finite, n + 2 * r, "theorem_b"};
    return {BoundKind::NotApplicable, 0, "theorem_b"};
}

int bound_theorem_c(int n, int r, TheoremCVariant variant)
{
    if (n < 0 || r < 0)
        throw ArgumentError("bound_theorem_c needs n, r >= 0");
    switch (variant) {
    case TheoremCVariant::Full: return n + r + 1;
    case TheoremCVariant::EvenOnly: return r;
    case TheoremCVariant::OddOnly: return n;
    }
    return n + r + 1;
}

namespace {

// Largest power 2s+1 of the ECT family {int y^(2s+1) dx} whose bound r is known.
constexpr int ect_family_max_r = 30;

int max_degree(const std::vector<PowerTerm>& terms)
{
    int n = 0;
    for (const auto& t : terms)
        n = std::max(n, t.poly.degree());
    return n;
}

}  // namespace

Bound applicable_bound(const Perturbation& p, Region region)
{
    if (region == Region::Oscillatory) {
        const auto terms = reduce_oscillatory(p);
        if (terms.empty())
            return {BoundKind::Center, 0, "theorem_b"};
        const int n = max_degree(terms);
        const int s1 = terms.front().power;
        const int s2 = terms.back().power;
        Bound best{BoundKind::Finite, bound_theorem_a(n, s2, region), "theorem_a"};
        const Bound b = bound_theorem_b(n, s1, s2);
        if (b.finite() && b.value < best.value)
            best = b;
        const int r = (s2 - 1) / 2;
        if (n == 0 && r <= ect_family_max_r && r < best.value)
            best = {BoundKind::Finite, r, "ect_family"};
        return best;
    }
    const RotaryReduction reduced = reduce_rotary(p);
    if (reduced.even.empty() && reduced.odd.empty())
        return {BoundKind::NotApplicable, 0, "identically_zero"};
    const int n = std::max(max_degree(reduced.even), max_degree(reduced.odd));
    const int m = std::max(reduced.even.empty() ? 0 : reduced.even.back().power,
                           reduced.odd.empty() ? 0 : reduced.odd.back().power);
    Bound best{BoundKind::Finite, bound_theorem_a(n, m, region), "theorem_a"};
    if (reduced.odd.size() <= 1) {
        const int r = reduced.even.empty() ? 0 : reduced.even.back().power / 2;
        int c = 0;
        if (reduced.odd.empty())
            c = bound_theorem_c(n, r, TheoremCVariant::EvenOnly);
        else if (reduced.even.empty())
            c = bound_theorem_c(max_degree(reduced.odd), r, TheoremCVariant::OddOnly);
        else
            c = bound_theorem_c(n, r, TheoremCVariant::Full);
        if (c < best.value)
            best = {BoundKind::Finite, c, "theorem_c"};
    }
    return best;
}

std::vector<double> scan_grid(Region region, double h_min, double h_max, int grid)
{
    if (grid < 2)
        throw ArgumentError("scan grid needs at least two points");
    const bool rotary = is_rotary(region);
    auto forward = [&](double h) { return rotary ? std::log(h - 2) : std::log(h / (2 - h)); };
    auto back = [&](double t) { return rotary ? 2 + std::exp(t) : 2 / (1 + std::exp(-t)); };
    const double t0 = forward(h_min);
    const double t1 = forward(h_max);
    std::vector<double> hs(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i)
        hs[static_cast<std::size_t>(i)] = back(t0 + (t1 - t0) * i / (grid - 1));
    hs.front() = h_min;
    hs.back() = h_max;
    return hs;
}

namespace {

int sign_of(const Wide& v)
{
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

constexpr int max_refine_iterations = 200;
constexpr double double_zero_threshold = 1e-10;

// Root of g in [a, b] where g(a), g(b) have opposite signs: Newton steps
// while they stay inside the shrinking bracket, bisection otherwise.
template <class G, class DG>
double refine_root(const G& g, const DG& dg, double a, double b)
{
    Wide ga = g(a);
    double x = 0.5 * (a + b);
    for (int it = 0; it < max_refine_iterations; ++it) {
        const Wide gx = g(x);
        if (gx == 0)
            return x;
        if (sign_of(gx) == sign_of(ga)) {
            a = x;
            ga = gx;
        } else {
            b = x;
        }
        if (b - a <= refine_tolerance * std::abs(x))
            return 0.5 * (a + b);
        const Wide slope = dg(x);
        double next = 0.5 * (a + b);
        if (slope != 0) {
            const double newton = x - static_cast<double>(gx / slope);
            if (std::isfinite(newton) && newton > a && newton < b) {
                if (std::abs(newton - x) <= refine_tolerance * std::abs(x))
                    return newton;
                next = newton;
            }
        }
        x = next;
    }
    throw BracketFailureError("zero refinement did not converge in " + std::to_string(max_refine_iterations)
                              + " iterations");
}

void check_scan_interval(Region region, double h_min, double h_max)
{
    const bool ok = is_rotary(region) ? (h_min > 2 && h_max > h_min && std::isfinite(h_max))
                                      : (h_min > 0 && h_max > h_min && h_max < 2);
    if (!ok)
        throw DomainError("scan interval [" + std::to_string(h_min) + ", " + std::to_string(h_max)
                          + "] is not inside the " + std::string(to_string(region)) + " region");
}

}  // namespace

ZeroReport count_zeros(const EllipticForm& f, double h_min, double h_max, int grid, const std::optional<Bound>& bound)
{
    if (f.is_zero())
        throw IdenticallyZeroError();
    if (grid < 64)
        throw ArgumentError("zero scans need a grid of at least 64 points");
    check_scan_interval(f.region, h_min, h_max);

    const FormEvaluator value(f);
    const FormEvaluator slope(differentiate_form(f));
    const FormEvaluator curvature(differentiate_form(differentiate_form(f)));
    auto g = [&](double h) { return value.wide(h); };
    auto dg = [&](double h) { return slope.wide(h); };
    auto ddg = [&](double h) { return curvature.wide(h); };

    const std::vector<double> hs = scan_grid(f.region, h_min, h_max, grid);
    std::vector<Wide> vs(hs.size());
    parallel_for(hs.size(), [&](std::size_t i) { vs[i] = g(hs[i]); });

    Wide scale = 0;
    for (const auto& v : vs)
        scale = std::max(scale, abs(v));

    ZeroReport report;
    report.region = f.region;
    report.h_min = h_min;
    report.h_max = h_max;
    report.grid = grid;
    report.tolerance = refine_tolerance;
    report.bound = bound;

    const std::size_t last = hs.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
        const int s0 = sign_of(vs[i]);
        const int s1 = sign_of(vs[i + 1]);
        if (s0 == 0) {
            // exact hit on a grid point; only interior points are zeros of the open scan
            if (i > 0) {
                const bool crosses = sign_of(vs[i - 1]) * s1 < 0;
                report.zeros.push_back({hs[i], crosses ? 1 : 2});
            }
            continue;
        }
        if (s0 * s1 < 0) {
            report.zeros.push_back({refine_root(g, dg, hs[i], hs[i + 1]), 1});
            continue;
        }
        // no sign change: look for a near-touching local minimum of |f|
        if (i == 0 || s1 == 0 || sign_of(vs[i - 1]) != s0)
            continue;
        if (!(abs(vs[i]) <= abs(vs[i - 1]) && abs(vs[i]) <= abs(vs[i + 1])))
            continue;
        const Wide d0 = dg(hs[i - 1]);
        const Wide d1 = dg(hs[i + 1]);
        if (sign_of(d0) * sign_of(d1) >= 0)
            continue;
        const double h_star = refine_root(dg, ddg, hs[i - 1], hs[i + 1]);
        const Wide at_star = g(h_star);
        if (sign_of(at_star) == -s0) {
            // two simple zeros closer together than the grid spacing
            report.zeros.push_back({refine_root(g, dg, hs[i - 1], h_star), 1});
            report.zeros.push_back({refine_root(g, dg, h_star, hs[i + 1]), 1});
        } else if (abs(at_star) < double_zero_threshold * scale) {
            report.zeros.push_back({h_star, 2});
        }
    }
    std::sort(report.zeros.begin(), report.zeros.end(), [](const Zero& a, const Zero& b) { return a.h < b.h; });
    for (const auto& z : report.zeros) {
        report.count += z.multiplicity;
        if (z.multiplicity == 1)
            ++report.simple_count;
    }
    if (bound && bound->finite() && report.count > bound->value)
        throw BoundViolationError(std::to_string(report.count) + " zeros found on the "
                                  + std::string(to_string(f.region)) + " region, above the " + bound->source
                                  + " bound " + std::to_string(bound->value));
    return report;
}

std::pair<double, double> scan_interval(Region region, const ScanOptions& options)
{
    if (!(options.delta > 0 && options.delta < 1))
        throw ArgumentError("delta must lie in (0, 1)");
    if (is_rotary(region)) {
        if (!(options.h_max > 2 + options.delta))
            throw ArgumentError("h_max must exceed 2 + delta");
        return {2 + options.delta, options.h_max};
    }
    return {options.delta, 2 - options.delta};
}

ZeroReport analyze(const Perturbation& p, Region region, const ScanOptions& options)
{
    const EllipticForm form = build_melnikov(p, region);
    const Bound bound = applicable_bound(p, region);
    const auto [lo, hi] = scan_interval(region, options);
    if (form.is_zero()) {
        ZeroReport report;
        report.region = region;
        report.bound = bound;
        report.h_min = lo;
        report.h_max = hi;
        report.grid = options.grid;
        report.tolerance = refine_tolerance;
        return report;
    }
    return count_zeros(form, lo, hi, options.grid, bound);
}

std::string Configuration::label() const
{
    return "[" + std::to_string(minus) + ";" + std::to_string(zero) + ";" + std::to_string(plus) + "]";
}

Configuration configuration_analysis(const Perturbation& p, const ScanOptions& options)
{
    Configuration c;
    const ZeroReport minus = analyze(p, Region::RotaryMinus, options);
    const ZeroReport zero = analyze(p, Region::Oscillatory, options);
    const ZeroReport plus = analyze(p, Region::RotaryPlus, options);
    c.minus = minus.simple_count;
    c.zero = zero.simple_count;
    c.plus = plus.simple_count;
    c.bound_minus = *minus.bound;
    c.bound_zero = *zero.bound;
    c.bound_plus = *plus.bound;
    return c;
}

int count_sign_changes(const std::vector<Wide>& values)
{
    int changes = 0;
    int previous = 0;
    for (const auto& v : values) {
        const int s = sign_of(v);
        if (s == 0)
            continue;
        if (previous != 0 && s != previous)
            ++changes;
        previous = s;
    }
    return changes;
}

Monotonicity quotient_monotonicity(Region region, int samples, const ScanOptions& options)
{
    const auto [lo, hi] = scan_interval(region, options);
    const auto [l0, l1] = base_L0_L1(region);
    const FormEvaluator e0(l0);
    const FormEvaluator e1(l1);
    const std::vector<double> hs = scan_grid(region, lo, hi, samples);
    Monotonicity out;
    out.samples = samples;
    out.max_difference = -std::numeric_limits<double>::infinity();
    Wide previous = e1.wide(hs.front()) / e0.wide(hs.front());
    for (std::size_t i = 1; i < hs.size(); ++i) {
        const Wide q = e1.wide(hs[i]) / e0.wide(hs[i]);
        const double diff = static_cast<double>(q - previous);
        out.max_difference = std::max(out.max_difference, diff);
        if (!(diff < 0))
            out.decreasing = false;
        previous = q;
    }
    return out;
}

}  // namespace pendmel
