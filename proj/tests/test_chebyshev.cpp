#include "pendmel/chebyshev.hpp"
#include "pendmel/errors.hpp"
#include "pendmel/melnikov.hpp"
#include "pendmel/oracle.hpp"
#include "pendmel/presets.hpp"
#include "pendmel/sturm.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <random>

using namespace pendmel;

namespace {

const RationalPoly u = RationalPoly::monomial(1);

TrigRational over_sin(const TrigRational& f)
{
    return {f.numerator(), f.sin_power() + 1};
}

}  // namespace

TEST_CASE("K(m) sequence")
{
    const std::vector<long> expected{1, -1, 3, -15, 105, -945};
    for (int m = 0; m < 6; ++m)
        CHECK(k_constant(m) == expected[static_cast<std::size_t>(m)]);
}

TEST_CASE("P_jm examples")
{
    CHECK(pjm(1, 0) == -u);
    CHECK(pjm(2, 0) == RationalPoly{1, 0, 2});
    CHECK(pjm(3, 3) == RationalPoly{-15});
    CHECK_THROWS_AS(pjm(1, 2), ArgumentError);
}

TEST_CASE("P_jm recurrence agrees with repeated L")
{
    for (int m = 0; m <= 6; ++m)
        for (int j = m; j <= 6; ++j) {
            const TrigRational direct = apply_L(TrigRational(chebyshev_T(m), 0), j);
            CHECK(direct.sin_power() == 2 * j);
            CHECK(direct.numerator() == pjm(j, m));
            CHECK(pjm(j, m).degree() == j - m);
        }
}

TEST_CASE("reduce_integrand")
{
    const RationalPoly p{3, -1, 2};
    CHECK(reduce_integrand(p, 0) == TrigRational(p, 0));
    CHECK(reduce_integrand(RationalPoly{1}, 2) == TrigRational(RationalPoly{1, 0, 2}, 4));
    for (int n = 0; n <= 5; ++n) {
        const TrigRational r = reduce_integrand(chebyshev_T(n), n);
        CHECK(r == TrigRational(RationalPoly::constant(Rational(k_constant(n))), 2 * n));
    }
}

TEST_CASE("Theorem B reduction")
{
    const TheoremBReduction constant = theorem_b_reduction({{1, RationalPoly{Rational(5, 2)}}}, 0);
    CHECK(constant.r_poly.degree() == 0);
    CHECK(constant.exponent == 1);
    for (int n = 2; n <= 5; ++n) {
        const TheoremBReduction b = theorem_b_reduction(reduce_oscillatory(sharp_r1(n)));
        CHECK(b.n == n);
        CHECK(b.r == 1);
        CHECK(b.ell == 1);
        CHECK(b.exponent == 1 + 2 * n + 2);
        CHECK(b.hypothesis_holds);
        CHECK(b.r_poly == RationalPoly{2 * n + 1});
    }
    // single term cos x y, n = 1: R has degree <= 1
    const TheoremBReduction one = theorem_b_reduction(reduce_oscillatory(morozov(1)));
    CHECK(one.r_poly.degree() <= 1);
    const int roots = one.r_poly.degree() > 0 ? roots_in_unit_interval(one.r_poly) : 0;
    CHECK(roots == analyze(morozov(1), Region::Oscillatory).count);
    // l = 1 with r = 2 violates 2r < l + 3
    const TheoremBReduction violated = theorem_b_reduction({{1, u}, {3, u}, {5, u}});
    CHECK_FALSE(violated.hypothesis_holds);
}

TEST_CASE("Wronskian examples")
{
    const TrigRational one = TrigRational::constant(1);
    CHECK(wronskian({one}) == one);
    CHECK(wronskian({one, apply_L(one)}) == TrigRational(RationalPoly{1, 0, 1}, 3));
    CHECK(wronskian({one, apply_L(one), apply_L(one, 2)})
          == TrigRational(Rational(4) * RationalPoly{2, 0, 3, 0, 6, 0, 1}, 9));
    CHECK(wronskian({one, one}).is_zero());
}

TEST_CASE("Wronskian is antisymmetric and matches its leading minors")
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 10; ++t) {
        std::vector<TrigRational> fs;
        for (int i = 0; i < 4; ++i)
            fs.emplace_back(RationalPoly{c(rng), c(rng), c(rng)}, 2 * i + 1);
        std::vector<TrigRational> swapped = fs;
        std::swap(swapped[1], swapped[3]);
        CHECK((wronskian(fs) + wronskian(swapped)).is_zero());
        const auto minors = leading_wronskians(fs);
        REQUIRE(minors.size() == fs.size());
        for (std::size_t k = 1; k <= fs.size(); ++k)
            CHECK(minors[k - 1] == wronskian(std::vector<TrigRational>(fs.begin(), fs.begin() + static_cast<long>(k))));
    }
    CHECK_THROWS_AS(wronskian({}), ArgumentError);
    CHECK_THROWS_AS(wronskian(std::vector<TrigRational>(14, TrigRational::constant(1))), ArgumentError);
}

TEST_CASE("pnova r = 2 reproduces the three Wronskians")
{
    const Certificate c = pnova_check(2);
    CHECK(c.status == CertificateStatus::Pass);
    CHECK(c.v == 3);
    CHECK(c.side_condition);
    REQUIRE(c.orders.size() == 3);
    CHECK(c.orders[0].numerator.primitive() == RationalPoly{1});
    CHECK(c.orders[1].numerator.primitive() == RationalPoly{1, 0, 1});
    CHECK(c.orders[2].numerator.primitive() == RationalPoly{2, 0, 3, 0, 6, 0, 1});
    for (const WronskianOrder& o : c.orders)
        CHECK(o.roots_in_interval == 0);
}

TEST_CASE("pnova small cases")
{
    const Certificate zero = pnova_check(0);
    CHECK(zero.status == CertificateStatus::Pass);
    CHECK(zero.orders.size() == 1);
    for (int r = 1; r <= 6; ++r)
        CHECK(pnova_check(r).status == CertificateStatus::Pass);
    CHECK_THROWS_AS(pnova_check(13), ArgumentError);
    CHECK_THROWS_AS(pnova_check(-1), ArgumentError);
}

TEST_CASE("cosine powers over a common sine power form an ECT family")
{
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 4; ++q) {
            std::vector<TrigRational> fs;
            for (int i = 0; i <= q; ++i)
                fs.emplace_back(RationalPoly::monomial(i), 2 * p + 1);
            const Certificate c = certify_ect(fs, q + 1);
            CHECK(c.status == CertificateStatus::Pass);
            CHECK(c.side_condition);
        }
}

TEST_CASE("certificate failures")
{
    const TrigRational f(u, 1);
    CHECK_THROWS_AS(certify_ect({f, f}, 3), ZeroWronskianError);
    // too many functions for v
    std::vector<TrigRational> fs;
    for (int i = 0; i < 4; ++i)
        fs.emplace_back(RationalPoly::monomial(i), 1);
    const Certificate side = certify_ect(fs, 1);
    CHECK(side.status == CertificateStatus::Fail);
    CHECK_FALSE(side.side_condition);
    // W[1, cos x] = -sin x has no interior root, but W[cos x] does
    const Certificate roots = certify_ect({over_sin(TrigRational(u, 0)), over_sin(TrigRational::constant(1))}, 2);
    CHECK(roots.status == CertificateStatus::Inconclusive);
    CHECK(roots.first_failure == 1);
}

TEST_CASE("certified families have well-conditioned collocation matrices")
{
    for (int r = 1; r <= 4; ++r) {
        REQUIRE(pnova_check(r).status == CertificateStatus::Pass);
        const int size = r + 1;
        Eigen::MatrixXd a(size, size);
        for (int i = 0; i < size; ++i) {
            const double h = 0.2 + 1.6 * i / (size - 1);
            for (int s = 0; s <= r; ++s)
                a(i, s) = oracle::quad_I(0, 2 * s + 1, Region::Oscillatory, h).value;
        }
        a = a * a.colwise().norm().cwiseInverse().asDiagonal();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
        const auto& sv = svd.singularValues();
        CHECK(sv(0) / sv(size - 1) < 1e10);
    }
}

TEST_CASE("repeated certificates are identical")
{
    const Certificate a = pnova_check(5);
    const Certificate b = pnova_check(5);
    REQUIRE(a.orders.size() == b.orders.size());
    for (std::size_t i = 0; i < a.orders.size(); ++i)
        CHECK(a.orders[i].numerator == b.orders[i].numerator);
}
