#pragma once

#include "pendmel/poly.hpp"

#include <string>

namespace pendmel {

/// N(cos x) / sin^p(x) on (0, pi), with N a rational polynomial in u = cos x.
///
/// The class is closed under d/dx and under L[f] = (f / sin x)'. Sums are
/// only representable when the sine powers have equal parity.
class TrigRational {
public:
    TrigRational() = default;
    TrigRational(RationalPoly numerator, int sin_power);

    static TrigRational constant(const Rational& c) { return {RationalPoly::constant(c), 0}; }

    const RationalPoly& numerator() const noexcept { return numerator_; }
    int sin_power() const noexcept { return sin_power_; }
    bool is_zero() const noexcept { return numerator_.is_zero(); }

    double operator()(double x) const;

    /// Strip (1 - u^2) factors from the numerator while sin_power >= 2.
    TrigRational canonical() const;
    /// Same function rewritten over sin^target (target >= sin_power, same parity).
    TrigRational lifted_to(int target) const;

    TrigRational& operator+=(const TrigRational& rhs);
    TrigRational& operator-=(const TrigRational& rhs);
    friend TrigRational operator+(TrigRational a, const TrigRational& b) { return a += b; }
    friend TrigRational operator-(TrigRational a, const TrigRational& b) { return a -= b; }
    friend TrigRational operator*(const TrigRational& a, const TrigRational& b);
    friend TrigRational operator*(const Rational& c, TrigRational f);
    TrigRational times_cos() const;

    /// Semantic equality: equal as functions on (0, pi).
    friend bool operator==(const TrigRational& a, const TrigRational& b);

    std::string to_string() const;

private:
    RationalPoly numerator_;
    int sin_power_ = 0;
};

/// 1 - u^2, i.e. sin^2 x written in u.
const RationalPoly& one_minus_u2();

/// d/dx: numerator -N'(u)(1-u^2) - p u N(u), sine power p+1.
TrigRational diff_x(const TrigRational& f);

/// L[f] = (f / sin x)': numerator -N'(u)(1-u^2) - (p+1) u N(u), sine power p+2.
TrigRational apply_L(const TrigRational& f);

TrigRational apply_L(const TrigRational& f, int times);

}  // namespace pendmel
