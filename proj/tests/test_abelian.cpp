#include "pendmel/abelian.hpp"
#include "pendmel/errors.hpp"
#include "pendmel/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace pendmel;

namespace {

// I_{n,r}(h) with r an odd power of the square root.
double closed_I(int n, int r, Region region, double h)
{
    return eval_form(build_I_odd(n, (r - 1) / 2, region), h);
}

bool close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("region names")
{
    CHECK(parse_region("osc") == Region::Oscillatory);
    CHECK(parse_region("rotary_minus") == Region::RotaryMinus);
    CHECK(parse_region("plus") == Region::RotaryPlus);
    CHECK(to_string(Region::RotaryPlus) == "rotary_plus");
    CHECK_THROWS_AS(parse_region("sideways"), ArgumentError);
    CHECK(is_rotary(Region::RotaryMinus));
    CHECK_FALSE(is_rotary(Region::Oscillatory));
    CHECK(parse_scalar(to_string(Scalar::Sqrt2)) == Scalar::Sqrt2);
}

TEST_CASE("reference values, oscillatory")
{
    // 30-digit reference quadrature
    const Region osc = Region::Oscillatory;
    CHECK(close(closed_I(0, 1, osc, 1.0), 1.19814023473559221, 1e-14));
    CHECK(close(closed_I(1, 1, osc, 1.0), 0.87401918476403994, 1e-14));
    CHECK(close(closed_I(3, 1, osc, 0.5), 0.40231421324543252, 1e-14));
    CHECK(close(closed_I(0, 3, osc, 1.0), 0.87401918476403994, 1e-14));
    CHECK(close(closed_I(2, 5, osc, 1.5), 1.70877317459900372, 1e-14));
}

TEST_CASE("reference values, rotary")
{
    const Region rot = Region::RotaryPlus;
    CHECK(close(closed_I(1, 3, rot, 5.0), 4.70309331743620251, 1e-14));
    CHECK(close(closed_I(4, 1, rot, 3.0), 1.61931575381009951, 1e-14));
    CHECK(close(closed_I(0, 1, rot, 3.0), 4.36887628549240237, 1e-14));
    CHECK(std::abs(closed_I(6, 9, rot, 10.0) / 20973.3072023442776 - 1) < 1e-13);
}

TEST_CASE("closed forms agree with quadrature")
{
    for (Region region : {Region::Oscillatory, Region::RotaryPlus, Region::RotaryMinus}) {
        const std::vector<double> hs = is_rotary(region) ? std::vector<double>{2.3, 4.0, 17.0}
                                                         : std::vector<double>{0.05, 0.8, 1.9};
        for (int n = 0; n <= 5; ++n)
            for (int r = 0; r <= 3; ++r)
                for (double h : hs) {
                    const auto ref = oracle::quad_I(n, 2 * r + 1, region, h);
                    const double value = eval_form(build_I_odd(n, r, region), h);
                    CHECK(std::abs(value - ref.value) <= 1e-12 * std::max(1.0, ref.l1));
                }
    }
}

TEST_CASE("even powers on the rotary region")
{
    for (int n = 0; n <= 6; ++n)
        for (int s = 0; s <= 3; ++s) {
            const EllipticForm f = build_I_even(n, s);
            CHECK_FALSE(f.has_elliptic_part());
            for (double h : {2.5, 7.0}) {
                const auto ref = oracle::quad_I(n, 2 * s, Region::RotaryPlus, h);
                CHECK(std::abs(eval_form(f, h) - ref.value) <= 1e-12 * std::max(1.0, ref.l1));
            }
        }
}

TEST_CASE("Wallis ratios")
{
    CHECK(wallis(0) == 1);
    CHECK(wallis(1) == 0);
    CHECK(wallis(2) == Rational(1, 2));
    CHECK(wallis(4) == Rational(3, 8));
    CHECK(wallis(7) == 0);
}

TEST_CASE("degree bookkeeping")
{
    for (Region region : {Region::Oscillatory, Region::RotaryPlus})
        for (int n = 1; n <= 8; ++n) {
            CHECK(build_Ln(n, region).elliptic_degree() == n);
            for (int r = 0; r <= 3; ++r)
                CHECK(build_I_odd(n, r, region).elliptic_degree() == n + r);
        }
    CHECK(build_Ln(0, Region::RotaryPlus).p.is_zero());
}

TEST_CASE("rotary branches are reflections")
{
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= 2; ++r)
            for (double h : {2.2, 3.0, 12.0}) {
                const double plus = eval_form(build_I_odd(n, r, Region::RotaryPlus), h);
                const double minus = eval_form(build_I_odd(n, r, Region::RotaryMinus), h);
                CHECK(std::abs(plus + minus) <= 1e-14 * std::abs(plus));
            }
}

TEST_CASE("odd powers are continuous across the separatrix")
{
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= 2; ++r) {
            const EllipticForm osc = build_I_odd(n, r, Region::Oscillatory);
            const EllipticForm rot = build_I_odd(n, r, Region::RotaryPlus);
            const double below = eval_form(osc, 2 - 1e-8);
            const double above = eval_form(rot, 2 + 1e-8);
            const double limit = separatrix_limit(osc);
            CHECK(std::abs(below - limit) < 1e-6);
            CHECK(std::abs(above - limit) < 1e-6);
            CHECK(std::abs(separatrix_limit(rot) - limit) < 1e-14 * std::max(1.0, std::abs(limit)));
        }
    CHECK(std::abs(separatrix_limit(build_Ln(1, Region::Oscillatory)) - 2 * std::sqrt(2.0) / 3) < 1e-15);
}

TEST_CASE("Picard-Fuchs derivative matches finite differences")
{
    for (Region region : {Region::Oscillatory, Region::RotaryPlus})
        for (int n = 0; n <= 4; ++n)
            for (int r = 0; r <= 2; ++r) {
                const EllipticForm f = build_I_odd(n, r, region);
                const EllipticForm df = differentiate_form(f);
                for (double h : is_rotary(region) ? std::vector<double>{2.6, 9.0} : std::vector<double>{0.4, 1.3}) {
                    const double step = 1e-5 * h;
                    const double fd = (eval_form(f, h + step) - eval_form(f, h - step)) / (2 * step);
                    CHECK(std::abs(eval_form(df, h) - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
                }
            }
}

TEST_CASE("form algebra")
{
    const EllipticForm a = build_Ln(2, Region::Oscillatory);
    const EllipticForm b = build_Ln(3, Region::Oscillatory);
    const double h = 0.7;
    CHECK(close(eval_form(a + b, h), eval_form(a, h) + eval_form(b, h), 1e-15));
    CHECK(close(eval_form(Rational(3, 2) * a - b, h), 1.5 * eval_form(a, h) - eval_form(b, h), 1e-15));
    CHECK(close(eval_form(times_sqrt2(a), h), std::sqrt(2.0) * eval_form(a, h), 1e-15));
    CHECK(close(eval_form(times_sqrt2(times_sqrt2(a)), h), 2 * eval_form(a, h), 1e-15));
    CHECK((a - a).is_zero());
    CHECK(zero_form(Region::Oscillatory).is_zero());
    CHECK_THROWS_AS(a + build_Ln(2, Region::RotaryPlus), ArgumentError);
}

TEST_CASE("evaluation outside the region")
{
    const EllipticForm osc = build_Ln(1, Region::Oscillatory);
    const EllipticForm rot = build_Ln(1, Region::RotaryPlus);
    CHECK_THROWS_AS(eval_form(osc, 2.5), DomainError);
    CHECK_THROWS_AS(eval_form(osc, 0.0), DomainError);
    CHECK_THROWS_AS(eval_form(rot, 1.5), DomainError);
    CHECK_THROWS_AS(eval_form(rot, 2.0), DomainError);
    CHECK_NOTHROW(eval_form(rot, 2.0 + 1e-9));
}
