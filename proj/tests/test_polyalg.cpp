#include "pendmel/errors.hpp"
#include "pendmel/homog.hpp"
#include "pendmel/poly.hpp"
#include "pendmel/sturm.hpp"
#include "pendmel/trig_rational.hpp"

#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>

using namespace pendmel;

namespace {

const RationalPoly u = RationalPoly::monomial(1);

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

RationalPoly random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
        c.push_back(q(coeff(rng), den(rng)));
    }
    return RationalPoly(c);
}

TrigRational random_trig(std::mt19937& rng)
{
    std::uniform_int_distribution<int> power(0, 3);
    return {random_poly(rng, 4), power(rng)};
}

}  // namespace

TEST_CASE("rational text round trip")
{
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
    CHECK_THROWS_AS(parse_rational("abc"), ArgumentError);
    CHECK(exact_rational(0.1) != Rational(1, 10));
    CHECK(to_double(exact_rational(0.1)) == 0.1);
}

TEST_CASE("polynomial normalisation and arithmetic")
{
    RationalPoly zero({Rational(0), Rational(0)});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    const RationalPoly p{1, 2, 3};
    const RationalPoly q{-1, 1};
    CHECK((p * q).degree() == 3);
    CHECK((p * q)(Rational(2)) == p(Rational(2)) * q(Rational(2)));
    CHECK(p.derivative() == RationalPoly{2, 6});
    auto [quot, rem] = RationalPoly::divmod(p * q + RationalPoly{5}, q);
    CHECK(quot == p);
    CHECK(rem == RationalPoly{5});
    CHECK((p * q).exact_div(q) == p);
    CHECK_THROWS_AS(p.exact_div(q), ArgumentError);
    CHECK_THROWS_AS(RationalPoly::divmod(p, RationalPoly()), ZeroPolynomialError);
    // p(2x - 1)
    CHECK(p.compose_affine(2, -1) == p.compose(RationalPoly::linear(2, -1)));
    CHECK(pow(q, 3)(Rational(3)) == 8);
    CHECK(std::abs(p(0.5) - 2.75) < 1e-15);
}

TEST_CASE("composition and evaluation agree on random inputs")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        const RationalPoly a = random_poly(rng, 5);
        const RationalPoly b = random_poly(rng, 3);
        const Rational x = q(t - 25, 7);
        CHECK(a.compose(b)(x) == a(b(x)));
        CHECK((a + b)(x) == a(x) + b(x));
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("V_m kernel")
{
    const HomogPoly2 v0 = vm_recurrence(0, Rational(1, 2));
    CHECK(v0.degree() == 0);
    CHECK(v0.coeff(0) == Rational(2, 3));
    const HomogPoly2 v1 = vm_recurrence(1, Rational(1, 2));
    // (2/5)(t - (2/3) s)
    CHECK(v1.coeff(1) == Rational(2, 5));
    CHECK(v1.coeff(0) == Rational(-4, 15));
}

TEST_CASE("V_m is an antiderivative kernel")
{
    const double t = 0.3;
    const double s = 0.7;
    const double step = 1e-6;
    for (const Rational r : {Rational(1, 2), Rational(3, 2), Rational(2)}) {
        const double rd = to_double(r);
        for (int m = 0; m <= 8; ++m) {
            const HomogPoly2 v = vm_recurrence(m, r);
            auto F = [&](double tt) { return std::pow(tt + s, rd + 1) * v(tt, s); };
            const double derivative = (F(t + step) - F(t - step)) / (2 * step);
            CHECK(std::abs(derivative - std::pow(t, m) * std::pow(t + s, rd)) < 1e-8);
        }
    }
}

TEST_CASE("diff_x")
{
    CHECK(diff_x(TrigRational::constant(1)).is_zero());
    const TrigRational d = diff_x(TrigRational(u, 0));
    CHECK(d.sin_power() == 1);
    CHECK(d.numerator() == -one_minus_u2());
    // -cos x / sin^2 x
    const TrigRational f(-u, 2);
    const double x = 1.0;
    const double step = 1e-6;
    CHECK(std::abs(diff_x(f)(x) - (f(x + step) - f(x - step)) / (2 * step)) < 1e-8);
}

TEST_CASE("operator L on 1")
{
    const TrigRational one = TrigRational::constant(1);
    const TrigRational l1 = apply_L(one);
    CHECK(l1.numerator() == -u);
    CHECK(l1.sin_power() == 2);
    const TrigRational l2 = apply_L(l1);
    CHECK(l2.numerator() == RationalPoly{1, 0, 2});
    CHECK(l2.sin_power() == 4);
    CHECK(apply_L(one, 2) == l2);
}

TEST_CASE("L^m cos(m x) is constant over sin^(2m)")
{
    CHECK(apply_L(TrigRational(u, 0)) == TrigRational(RationalPoly{-1}, 2));
    // cos(3x) = 4u^3 - 3u
    const TrigRational f(RationalPoly{0, -3, 0, 4}, 0);
    const TrigRational image = apply_L(f, 3);
    CHECK(image.sin_power() == 6);
    CHECK(image.numerator().degree() == 0);
}

TEST_CASE("L is linear")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        TrigRational f = random_trig(rng);
        TrigRational g = random_trig(rng);
        // sums need equal sine-power parity
        if ((f.sin_power() - g.sin_power()) % 2 != 0)
            g = TrigRational(g.numerator(), g.sin_power() + 1);
        const Rational a = q(t - 20, 3);
        const Rational b = q(7, t + 1);
        CHECK(apply_L(a * f + b * g) == a * apply_L(f) + b * apply_L(g));
    }
}

TEST_CASE("L^j[f cos x] = L^j[f] cos x - j L^(j-1)[f]")
{
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        const TrigRational f = random_trig(rng);
        for (int j = 1; j <= 5; ++j) {
            const TrigRational lhs = apply_L(f.times_cos(), j);
            const TrigRational rhs = apply_L(f, j).times_cos() - Rational(j) * apply_L(f, j - 1);
            CHECK((lhs - rhs).is_zero());
        }
    }
}

TEST_CASE("TrigRational evaluation matches its definition")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        const TrigRational f = random_trig(rng);
        for (double x : {0.3, 1.1, 2.0, 2.9}) {
            const double direct = f.numerator()(std::cos(x)) / std::pow(std::sin(x), f.sin_power());
            CHECK(std::abs(f(x) - direct) <= 1e-14 * std::max(1.0, std::abs(direct)));
        }
    }
    CHECK_THROWS_AS(TrigRational(u, -1), ArgumentError);
    CHECK_THROWS_AS(TrigRational(u, 0) + TrigRational(u, 1), ArgumentError);
}

TEST_CASE("canonical form only strips exact sin^2 factors")
{
    const TrigRational f(one_minus_u2() * u, 3);
    CHECK(f.canonical().sin_power() == 1);
    CHECK(f.canonical().numerator() == u);
    const TrigRational g(u, 2);
    CHECK(g.canonical().sin_power() == 2);
    CHECK(f == TrigRational(u, 1));
}

TEST_CASE("Sturm counts")
{
    CHECK(sturm_count(RationalPoly{1, 0, 1}, -1, 1) == 0);
    CHECK(sturm_count(u, -1, 1) == 1);
    CHECK(sturm_count(RationalPoly{2, 0, 3, 0, 6, 0, 1}, -1, 1) == 0);
    CHECK(sturm_count(RationalPoly{Rational(-1, 4), 0, 1}, -1, 1) == 2);
    // (u - 1/3)^2 has one distinct root
    CHECK(sturm_count(pow(RationalPoly::linear(1, Rational(-1, 3)), 2), -1, 1) == 1);
    CHECK_THROWS_AS(sturm_count(RationalPoly(), -1, 1), ZeroPolynomialError);
    CHECK_THROWS_AS(sturm_count(u, 0, 1), EndpointRootError);
    CHECK_THROWS_AS(sturm_count(u, 1, -1), ArgumentError);
}

TEST_CASE("Sturm counts add over coprime products")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> root(-9, 9);
    for (int t = 0; t < 30; ++t) {
        RationalPoly p{1};
        RationalPoly g{1};
        std::vector<int> used;
        for (int i = 0; i < 3; ++i) {
            int r = root(rng);
            if (std::find(used.begin(), used.end(), r) != used.end())
                continue;
            used.push_back(r);
            (i % 2 == 0 ? p : g) *= RationalPoly::linear(1, q(-r, 10));
        }
        g *= RationalPoly{Rational(1, 2), 0, 1};
        const int cp = sturm_count(p, -1, 1);
        const int cq = sturm_count(g, -1, 1);
        CHECK(sturm_count(p * g, -1, 1) == cp + cq);
    }
}

TEST_CASE("endpoint factors are removed before counting")
{
    const RationalPoly p = pow(RationalPoly::linear(1, 1), 2) * RationalPoly::linear(1, -1) * RationalPoly{1, 0, 1};
    const EndpointStripped s = strip_unit_endpoint_roots(p);
    CHECK(s.factors_at_minus_one == 2);
    CHECK(s.factors_at_plus_one == 1);
    CHECK(roots_in_unit_interval(p) == 0);
    CHECK(roots_in_unit_interval(p * u) == 1);
}
