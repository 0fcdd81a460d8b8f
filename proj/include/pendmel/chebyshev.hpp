#pragma once

#include "pendmel/fourier.hpp"
#include "pendmel/trig_rational.hpp"

#include <string>
#include <vector>

namespace pendmel {

/// K(m): L^m[cos(m x)] = K(m) / sin^(2m) x, with K(0) = 1 and
/// K(m+1) = -(2m+1) K(m).
Integer k_constant(int m);

/// P_{j,m}(u) with L^j[cos(m x)] = P_{j,m}(cos x) / sin^(2j) x, for j >= m.
/// Built from P_{m,m} = K(m) by
///   P_{j+1,m} = -P'_{j,m} (1 - u^2) - (2j + 1) u P_{j,m}.
/// Memoized; safe to call concurrently.
RationalPoly pjm(int j, int m);

/// L^shift applied to an even function given as a polynomial in u = cos x.
TrigRational reduce_integrand(const RationalPoly& even_in_u, int shift);

/// All odd-power terms lifted to the common power y^(l + 2n + 2r).
struct TheoremBReduction {
    int n = 0;
    int r = 0;
    int ell = 0;
    int exponent = 0;  // l + 2n + 2r
    /// sum_s R_s(u) (1 - u^2)^s with L^(n+r-s)[Q_{l+2s}] = R_s / sin^(2(n+r-s)).
    RationalPoly r_poly;
    /// The same sum with the factors 1/k of each lift y^(k-2) -> y^k kept,
    /// so that M0 is a positive multiple of the integral of
    /// weighted(cos x) / sin^(2(n+r)) x * y^exponent.
    RationalPoly weighted;
    bool hypothesis_holds = false;  // 2r < l + 3
};

/// terms: odd powers l, l+2, ..., l+2r (gaps allowed) with their even parts
/// in u. n defaults to the largest degree among the terms.
TheoremBReduction theorem_b_reduction(const std::vector<PowerTerm>& terms, int n = -1);

/// det(f_j^(i)) for i, j < fs.size(), exact. At most 13 functions.
TrigRational wronskian(const std::vector<TrigRational>& fs);

/// Leading Wronskians W[f_0], W[f_0, f_1], ..., from one fraction-free
/// elimination of the full derivative matrix. The k-th entry is
/// numerator_k / sin^power_k; a zero numerator means linear dependence.
std::vector<TrigRational> leading_wronskians(const std::vector<TrigRational>& fs);

enum class CertificateStatus { Pass, Fail, Inconclusive };
std::string_view to_string(CertificateStatus status);

struct WronskianOrder {
    int order = 0;
    RationalPoly numerator;  // as computed, before removing endpoint factors
    int sin_power = 0;
    int factors_at_minus_one = 0;
    int factors_at_plus_one = 0;
    int roots_in_interval = 0;  // distinct roots in (-1, 1)
    int sign = 0;               // sign on (-1, 1) when root-free
};

struct Certificate {
    CertificateStatus status = CertificateStatus::Pass;
    int functions = 0;
    int v = 0;
    bool side_condition = false;  // functions < v + 2
    std::vector<WronskianOrder> orders;
    int first_failure = 0;  // order of the first Wronskian with roots, 0 if none
    std::string message;
};

/// Exact ECT test of l-functions fs for integrands carrying y^(2v-1).
/// Throws ZeroWronskianError if some Wronskian vanishes identically.
Certificate certify_ect(const std::vector<TrigRational>& fs, int v);

inline constexpr int default_ect_cap = 12;

/// Certifies {int y^(2s+1) dx, s = 0..r}: every integral is lifted to
/// y^(2r+1) through L, giving l_i = L^i[1] / sin x.
Certificate pnova_check(int r, int cap = default_ect_cap);

}  // namespace pendmel
