#pragma once

#include "pendmel/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pendmel {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[i] multiplies x^i. The representation is kept normalised: the
/// leading coefficient is nonzero, and the zero polynomial has no
/// coefficients at all (degree -1).
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    RationalPoly(std::initializer_list<Rational> coeffs);

    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(int degree, const Rational& c = 1);
    /// a*x + b
    static RationalPoly linear(const Rational& a, const Rational& b);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int i) const;
    Rational leading() const;

    RationalPoly derivative() const;
    /// p(a*x + b)
    RationalPoly compose_affine(const Rational& a, const Rational& b) const;
    RationalPoly compose(const RationalPoly& inner) const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& c);

    friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
    friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
    friend RationalPoly operator*(RationalPoly lhs, const RationalPoly& rhs) { return lhs *= rhs; }
    friend RationalPoly operator*(RationalPoly lhs, const Rational& c) { return lhs *= c; }
    friend RationalPoly operator*(const Rational& c, RationalPoly rhs) { return rhs *= c; }
    RationalPoly operator-() const;

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    /// Euclidean division; throws ZeroPolynomialError for a zero divisor.
    static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& num, const RationalPoly& den);
    /// Division that must be exact; throws ArgumentError when a remainder is left.
    RationalPoly exact_div(const RationalPoly& den) const;
    bool divisible_by(const RationalPoly& den) const;

    /// Positive rational multiple with coprime integer coefficients.
    RationalPoly primitive() const;
    /// Divide by |leading coefficient|; keeps the sign pattern that Sturm
    /// sequences rely on.
    RationalPoly abs_monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

RationalPoly pow(const RationalPoly& base, int exponent);

/// Coefficients rounded to binary128, for repeated numeric evaluation.
std::vector<Wide> to_wide(const RationalPoly& p);

template <class Real>
Real horner(const std::vector<Real>& coeffs, Real x)
{
    Real acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

}  // namespace pendmel
