#pragma once

#include "pendmel/poly.hpp"
#include "pendmel/rational.hpp"

#include <vector>

namespace pendmel {

/// Homogeneous polynomial of degree m in (t, s): sum_i c_i t^i s^(m-i).
class HomogPoly2 {
public:
    HomogPoly2() = default;
    HomogPoly2(int degree, std::vector<Rational> coeffs);

    int degree() const noexcept { return degree_; }
    /// Coefficient of t^i s^(m-i).
    const Rational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    double operator()(double t, double s) const;
    /// Specialise s to a polynomial in an outer variable (e.g. s = h - 1),
    /// returning the polynomial coefficient attached to each power of t.
    std::vector<RationalPoly> in_t(const RationalPoly& s) const;

    friend bool operator==(const HomogPoly2&, const HomogPoly2&) = default;

private:
    int degree_ = 0;
    std::vector<Rational> coeffs_{Rational(0)};
};

/// Antiderivative kernel: int t^m (t+s)^r dt = (t+s)^(r+1) V_m(t,s), with
/// V_0 = 1/(r+1) and V_m = (t^m - m s V_{m-1}) / (r+m+1).
HomogPoly2 vm_recurrence(int m, const Rational& r);

}  // namespace pendmel
