#include "pendmel/presets.hpp"

#include "pendmel/chebyshev.hpp"
#include "pendmel/errors.hpp"
#include "pendmel/parallel.hpp"

#include <array>
#include <cmath>
#include <random>

namespace pendmel {

Perturbation morozov(int n)
{
    if (n < 0)
        throw ArgumentError("morozov needs n >= 0");
    Perturbation p;
    p.add(1, FourierPoly::cosine(n));
    return p;
}

Perturbation josephson(const Rational& a, const Rational& gamma)
{
    Perturbation p;
    p.add(0, FourierPoly::constant(a));
    p.add(1, FourierPoly::constant(-1) + FourierPoly::cosine(1, -gamma));
    return p;
}

Perturbation eq5(const Rational& a1, const Rational& c1, const Rational& a3, const Rational& c3)
{
    Perturbation p;
    p.add(1, FourierPoly::constant(a1) + FourierPoly::cosine(1, c1));
    p.add(3, FourierPoly::constant(a3) + FourierPoly::cosine(1, c3));
    return p;
}

Perturbation ex1(const Rational& a0, const Rational& a1)
{
    Perturbation p;
    p.add(1, FourierPoly::constant(a0) + FourierPoly::cosine(1, a1));
    return p;
}

Perturbation ex2(const Rational& a0, const Rational& a1, const Rational& a2, int r)
{
    if (r < 0)
        throw ArgumentError("ex2 needs r >= 0");
    Perturbation p;
    p.add(0, FourierPoly::constant(a0));
    p.add(2, FourierPoly::constant(a1));
    p.add(2 * r + 1, FourierPoly::constant(a2));
    return p;
}

Perturbation sharp_r1(int n)
{
    if (n < 1)
        throw ArgumentError("sharp_r1 needs n >= 1");
    Perturbation p;
    p.add(1, FourierPoly::cosine(n - 1, Rational(1) / (Rational(2 * n - 1) * Rational(k_constant(n - 1)))));
    p.add(3, FourierPoly::cosine(n, Rational(2 * n) / Rational(k_constant(n))));
    return p;
}

namespace {

const Rational& at(const std::vector<Rational>& c, std::size_t i)
{
    return c.at(i);
}

}  // namespace

const std::vector<PresetFamily>& preset_families()
{
    static const std::vector<PresetFamily> families{
        {"morozov", {"n"}, {},
         [](const std::vector<int>& s, const std::vector<Rational>&) { return morozov(s.at(0)); }},
        {"josephson", {}, {"a", "gamma"},
         [](const std::vector<int>&, const std::vector<Rational>& c) { return josephson(at(c, 0), at(c, 1)); }},
        {"eq5", {}, {"a1", "c1", "a3", "c3"},
         [](const std::vector<int>&, const std::vector<Rational>& c) {
             return eq5(at(c, 0), at(c, 1), at(c, 2), at(c, 3));
         }},
        {"ex1", {}, {"a0", "a1"},
         [](const std::vector<int>&, const std::vector<Rational>& c) { return ex1(at(c, 0), at(c, 1)); }},
        {"ex2", {"r"}, {"a0", "a1", "a2"},
         [](const std::vector<int>& s, const std::vector<Rational>& c) {
             return ex2(at(c, 0), at(c, 1), at(c, 2), s.at(0));
         }},
        {"sharp_r1", {"n"}, {},
         [](const std::vector<int>& s, const std::vector<Rational>&) { return sharp_r1(s.at(0)); }},
    };
    return families;
}

const PresetFamily& preset_family(std::string_view name)
{
    for (const auto& f : preset_families())
        if (f.name == name)
            return f;
    throw ArgumentError("unknown preset '" + std::string(name) + "'");
}

namespace {

// morozov and sharp_r1 default to n = 4; ex2 to r = 1; coefficients to 1.
int default_structure(const PresetFamily& family, std::size_t i)
{
    return family.structure.at(i) == "r" ? 1 : 4;
}

}  // namespace

Perturbation preset_from_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    const PresetFamily& family = preset_family(spec.substr(0, colon));
    std::vector<std::string> values;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            values.emplace_back(rest.substr(0, comma));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }
    const std::size_t ns = family.structure.size();
    const std::size_t nc = family.coefficients.size();
    if (values.size() > ns + nc)
        throw ArgumentError("too many values for preset '" + family.name + "'");
    std::vector<int> structure(ns);
    std::vector<Rational> coefficients(nc, Rational(1));
    for (std::size_t i = 0; i < ns; ++i) {
        if (i < values.size()) {
            const Rational v = parse_rational(values[i]);
            if (v.get_den() != 1 || !v.get_num().fits_sint_p())
                throw ArgumentError("structure parameter '" + family.structure[i] + "' must be an integer");
            structure[i] = static_cast<int>(v.get_num().get_si());
        } else {
            structure[i] = default_structure(family, i);
        }
    }
    for (std::size_t i = ns; i < values.size(); ++i)
        coefficients[i - ns] = parse_rational(values[i]);
    return family.make(structure, coefficients);
}

std::string preset_directory()
{
    return PENDMEL_PRESET_DIR;
}

std::vector<std::vector<Rational>> grid_points(int k, int grid)
{
    if (k < 0 || grid < 2)
        throw ArgumentError("grid_points needs k >= 0 and grid >= 2");
    std::vector<std::vector<Rational>> out{{}};
    for (int d = 0; d < k; ++d) {
        std::vector<std::vector<Rational>> next;
        for (const auto& prefix : out) {
            for (int i = 0; i < grid; ++i) {
                auto point = prefix;
                point.push_back(Rational(2 * i - (grid - 1), grid - 1));
                point.back().canonicalize();
                next.push_back(std::move(point));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<Rational>> random_points(int k, int draws, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    constexpr long scale = 1L << 20;
    std::uniform_int_distribution<long> dist(-scale, scale);
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(draws));
    for (auto& point : out) {
        for (int d = 0; d < k; ++d) {
            Rational v(dist(rng), scale);
            v.canonicalize();
            point.push_back(v);
        }
    }
    return out;
}

SweepResult sweep_configurations(const PresetFamily& family, const std::vector<int>& structure,
                                 const std::vector<std::vector<Rational>>& points, const ScanOptions& options)
{
    const std::size_t k = family.coefficients.size();
    constexpr std::array<Region, 3> regions{Region::RotaryMinus, Region::Oscillatory, Region::RotaryPlus};

    // samples[region][basis][grid index]
    std::array<std::vector<std::vector<Wide>>, 3> samples;
    for (std::size_t ri = 0; ri < regions.size(); ++ri) {
        const Region region = regions[ri];
        const auto [lo, hi] = scan_interval(region, options);
        const std::vector<double> hs = scan_grid(region, lo, hi, options.grid);
        const std::size_t basis_count = std::max<std::size_t>(k, 1);
        samples[ri].assign(basis_count, std::vector<Wide>(hs.size(), Wide(0)));
        for (std::size_t b = 0; b < basis_count; ++b) {
            std::vector<Rational> unit(k, Rational(0));
            if (k > 0)
                unit[b] = 1;
            const EllipticForm form = build_melnikov(family.make(structure, unit), region);
            if (form.is_zero())
                continue;
            const FormEvaluator eval(form);
            auto& column = samples[ri][b];
            parallel_for(hs.size(), [&](std::size_t i) { column[i] = eval.wide(hs[i]); });
        }
    }

    SweepResult result;
    result.preset = family.name;
    result.structure = structure;
    result.points.resize(points.size());
    parallel_for(points.size(), [&](std::size_t pi) {
        const auto& coefficients = points[pi];
        if (coefficients.size() != k)
            throw ArgumentError("sweep point has the wrong number of coefficients");
        const Perturbation p = family.make(structure, coefficients);
        std::array<int, 3> counts{};
        std::array<Bound, 3> bounds;
        for (std::size_t ri = 0; ri < regions.size(); ++ri) {
            const auto& basis = samples[ri];
            std::vector<Wide> values(basis.front().size(), Wide(0));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Wide w = k > 0 ? to_wide(coefficients[b]) : Wide(1);
                if (w == 0)
                    continue;
                for (std::size_t i = 0; i < values.size(); ++i)
                    values[i] += w * basis[b][i];
            }
            counts[ri] = count_sign_changes(values);
            bounds[ri] = applicable_bound(p, regions[ri]);
            if (bounds[ri].finite() && counts[ri] > bounds[ri].value)
                throw BoundViolationError("sweep point exceeds the " + bounds[ri].source + " bound on the "
                                          + std::string(to_string(regions[ri])) + " region");
        }
        SweepPoint& out = result.points[pi];
        out.coefficients = coefficients;
        out.configuration.minus = counts[0];
        out.configuration.zero = counts[1];
        out.configuration.plus = counts[2];
        out.configuration.bound_minus = bounds[0];
        out.configuration.bound_zero = bounds[1];
        out.configuration.bound_plus = bounds[2];
    });
    for (const auto& point : result.points)
        ++result.realized[point.configuration.label()];
    return result;
}

namespace {

// Null vector of a 3 x 4 matrix by signed 3 x 3 minors.
std::array<double, 4> null_vector(const std::array<std::array<double, 4>, 3>& a)
{
    auto minor = [&](int skip) {
        std::array<std::array<double, 3>, 3> m{};
        for (int i = 0; i < 3; ++i) {
            int c = 0;
            for (int j = 0; j < 4; ++j)
                if (j != skip)
                    m[i][c++] = a[i][j];
        }
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::array<double, 4> x{};
    for (int j = 0; j < 4; ++j)
        x[j] = (j % 2 == 0 ? 1 : -1) * minor(j);
    return x;
}

}  // namespace

Eq5Search search_eq5(int max_draws, std::uint64_t seed, const ScanOptions& options)
{
    const std::array<Perturbation, 4> basis{eq5(1, 0, 0, 0), eq5(0, 1, 0, 0), eq5(0, 0, 1, 0), eq5(0, 0, 0, 1)};
    std::vector<FormEvaluator> evals;
    for (const auto& p : basis)
        evals.emplace_back(build_melnikov(p, Region::Oscillatory));

    const auto [lo, hi] = scan_interval(Region::Oscillatory, options);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> node(lo, hi);
    Eq5Search out;
    for (int draw = 1; draw <= max_draws; ++draw) {
        std::array<std::array<double, 4>, 3> a{};
        for (auto& row : a) {
            const double h = node(rng);
            for (int j = 0; j < 4; ++j)
                row[j] = evals[static_cast<std::size_t>(j)](h);
        }
        const auto x = null_vector(a);
        double norm = 0;
        for (double v : x)
            norm = std::max(norm, std::abs(v));
        if (!(norm > 0) || !std::isfinite(norm))
            continue;
        // rounded to multiples of 2^-30; simple zeros survive the rounding
        constexpr double grain = 1073741824.0;
        std::vector<Rational> c;
        for (double v : x)
            c.push_back(exact_rational(std::round(v / norm * grain)) / exact_rational(grain));
        const Perturbation p = eq5(c[0], c[1], c[2], c[3]);
        ZeroReport report = analyze(p, Region::Oscillatory, options);
        if (report.simple_count >= 3) {
            out.found = true;
            out.draws = draw;
            out.coefficients = std::move(c);
            out.report = std::move(report);
            return out;
        }
        out.draws = draw;
    }
    return out;
}

}  // namespace pendmel
