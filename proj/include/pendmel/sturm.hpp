#pragma once

#include "pendmel/poly.hpp"

#include <vector>

namespace pendmel {

/// p, p', -rem(p, p'), ... over exact rationals, each term scaled by a
/// positive constant to keep coefficients small.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);

/// Number of distinct real roots of p in the open interval (a, b).
///
/// Throws ZeroPolynomialError for p == 0 and EndpointRootError if p(a) or
/// p(b) vanishes.
int sturm_count(const RationalPoly& p, const Rational& a, const Rational& b);

struct EndpointStripped {
    RationalPoly reduced;
    int factors_at_minus_one = 0;  // multiplicity of (u + 1)
    int factors_at_plus_one = 0;   // multiplicity of (u - 1)
};

/// Divide out every (u - 1) and (u + 1) factor, so that the result can be
/// fed to sturm_count on (-1, 1).
EndpointStripped strip_unit_endpoint_roots(const RationalPoly& p);

/// Root count of p on the open interval (-1, 1); endpoint roots are
/// removed first.
int roots_in_unit_interval(const RationalPoly& p);

}  // namespace pendmel
