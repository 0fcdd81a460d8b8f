#pragma once

#include "pendmel/poly.hpp"
#include "pendmel/rational.hpp"

#include <map>
#include <vector>

namespace pendmel {

/// sum_i a_i sin(i x) + b_i cos(i x) with exact coefficients.
///
/// sin[i-1] holds a_i (there is no sin(0 x) term); cos[i] holds b_i.
struct FourierPoly {
    std::vector<Rational> sin;
    std::vector<Rational> cos;

    static FourierPoly constant(const Rational& c) { return {{}, {c}}; }
    static FourierPoly cosine(int i, const Rational& c = 1);
    static FourierPoly sine(int i, const Rational& c = 1);

    /// Largest frequency with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    bool even_part_is_zero() const;

    double operator()(double x) const;

    /// The even part sum_i b_i cos(i x) as a polynomial in u = cos x.
    RationalPoly even_part_in_cos() const;

    FourierPoly& operator+=(const FourierPoly& rhs);
    friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
    friend FourierPoly operator*(const Rational& c, FourierPoly f);

    friend bool operator==(const FourierPoly&, const FourierPoly&) = default;
};

/// Chebyshev polynomial T_n with T_n(cos x) = cos(n x).
const RationalPoly& chebyshev_T(int n);

/// Right-hand side sum_s Q_s(x) y^s of the perturbed pendulum.
struct Perturbation {
    std::map<int, FourierPoly> terms;

    /// Largest power of y with a nonzero coefficient; -1 if there is none.
    int max_power() const;
    /// Largest Fourier degree over all terms; -1 if all vanish.
    int max_degree() const;
    bool is_zero() const { return max_power() < 0; }

    double operator()(double x, double y) const;

    Perturbation& add(int power, const FourierPoly& q);
    friend Perturbation operator+(Perturbation a, const Perturbation& b);
    friend Perturbation operator*(const Rational& c, Perturbation p);

    friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

/// A power of y together with the even part of its coefficient, in u = cos x.
struct PowerTerm {
    int power;
    RationalPoly poly;

    friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

}  // namespace pendmel
