#pragma once

#include "pendmel/errors.hpp"
#include "pendmel/rational.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>

namespace pendmel::elliptic {

template <class Real>
struct Complete {
    Real K;
    Real E;
};

/// K(k) and E(k) from one arithmetic-geometric-mean pass.
///
/// The complementary modulus enters as kc2 = 1 - k^2 so callers that know it
/// exactly (e.g. 1 - h/2) avoid the cancellation of forming it from k.
/// E uses the accumulated sum E = K (1 - sum_n 2^(n-1) c_n^2), c_0 = k.
template <class Real>
Complete<Real> agm(Real k, Real kc2)
{
    using std::abs;
    using std::sqrt;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real pi = boost::math::constants::pi<Real>();

    Real a = 1;
    Real b = sqrt(kc2);
    Real c = k;
    Real sum = c * c / 2;
    Real weight = 1;  // 2^(n-1) for the next c_n
    for (int i = 0; i < 64; ++i) {
        if (abs(c) <= eps * a)
            break;
        Real next_a = (a + b) / 2;
        Real next_b = sqrt(a * b);
        c = (a - b) / 2;
        a = next_a;
        b = next_b;
        sum += weight * c * c;
        weight *= 2;
    }
    Real K = pi / (2 * a);
    return {K, K * (1 - sum)};
}

/// K and E, for 0 <= k < 1.
template <class Real>
Complete<Real> complete(Real k)
{
    if (!(k >= 0) || !(k < 1))
        throw DomainError("complete elliptic integrals need 0 <= k < 1");
    return agm<Real>(k, (1 - k) * (1 + k));
}

/// K(k) for 0 <= k < 1.
double eval_K(double k);

/// E(k) for 0 <= k <= 1; E(1) = 1 exactly.
double eval_E(double k);

/// dK/dk = (E - (1 - k^2) K) / (k (1 - k^2)), for 0 < k < 1.
double deriv_K(double k);

/// dE/dk = (E - K) / k, for 0 < k < 1.
double deriv_E(double k);

}  // namespace pendmel::elliptic
