#pragma once

#include "pendmel/poly.hpp"
#include "pendmel/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pendmel {

/// Energy regions of the pendulum H = y^2/2 + 1 - cos x.
///
///   Oscillatory   h in (0, 2),   k = sqrt(h/2), upper limit arccos(1 - h)
///   RotaryPlus    h in (2, inf), k = sqrt(2/h), upper limit pi, y > 0
///   RotaryMinus   h in (2, inf), k = sqrt(2/h), upper limit pi, y < 0
enum class Region { Oscillatory, RotaryPlus, RotaryMinus };

std::string_view to_string(Region region);
/// Accepts the canonical names and the short forms "osc", "plus", "minus".
Region parse_region(std::string_view name);
bool is_rotary(Region region);

struct OpenInterval {
    double lo;
    double hi;
};
OpenInterval region_interval(Region region);

/// Closed forms refuse energies this close to the separatrix h = 2.
inline constexpr double separatrix_exclusion = 1e-12;

/// Irrational constant multiplying one component of a closed form.
enum class Scalar { One, Sqrt2, Pi };
std::string_view to_string(Scalar s);
Scalar parse_scalar(std::string_view name);

/// A function of the energy h of the form
///
///   [ cz * Z(h) + ck * sqrt(h)^[sqrt_h] * (P(h) K(k) + Q(h) E(k)) ] / (h (h - 2))^denom_power
///
/// with Z, P, Q exact rational polynomials, cz, ck in {1, sqrt 2, pi}, and
/// the modulus k(h) fixed by the region.
struct EllipticForm {
    Region region = Region::Oscillatory;
    RationalPoly z;
    RationalPoly p;
    RationalPoly q;
    bool sqrt_h = false;
    Scalar z_scalar = Scalar::One;
    Scalar ke_scalar = Scalar::One;
    int denom_power = 0;

    bool is_zero() const { return z.is_zero() && p.is_zero() && q.is_zero(); }
    bool has_elliptic_part() const { return !p.is_zero() || !q.is_zero(); }
    /// max(deg P, deg Q), -1 when both vanish.
    int elliptic_degree() const { return std::max(p.degree(), q.degree()); }

    friend bool operator==(const EllipticForm&, const EllipticForm&) = default;
};

EllipticForm zero_form(Region region);
EllipticForm operator+(const EllipticForm& a, const EllipticForm& b);
EllipticForm operator-(const EllipticForm& a, const EllipticForm& b);
EllipticForm operator*(const Rational& c, const EllipticForm& f);
/// Multiply by a polynomial in h (all components).
EllipticForm operator*(const RationalPoly& c, const EllipticForm& f);
EllipticForm times_sqrt2(const EllipticForm& f);

/// L_0 and L_1 (n = 0, 1 of I_{n,1}) for the region.
std::pair<EllipticForm, EllipticForm> base_L0_L1(Region region);

/// L_n = I_{n,1} = int_0^alpha cos^n x sqrt(h - 1 + cos x) dx.
///
/// For n >= 2, integration by parts against the antiderivative
/// (t+s)^(3/2) V_{n-2}(t,s) with t = cos x, s = h - 1 gives
///   L_n = (2n-1)/(2n+1) * (L_{n-2} - sum_{i<n-1} w_i (h-1)^(n-1-i) L_{i+1})
/// where w_i are the coefficients of (t+s) V_{n-2}(t,s).
EllipticForm build_Ln(int n, Region region);

/// I_{n,2r+1} via the binomial expansion of (h - 1 + cos x)^r.
EllipticForm build_I_odd(int n, int r, Region region);

/// I_{n,2s} on the rotary region: a polynomial in h times pi.
EllipticForm build_I_even(int n, int s, Region region = Region::RotaryPlus);

/// int_0^pi cos^m x dx / pi  (zero for odd m).
Rational wallis(int m);

/// d/dh through the Picard-Fuchs relations; the result carries one more
/// power of h(h-2) in its denominator (pure polynomial forms are
/// differentiated directly).
EllipticForm differentiate_form(const EllipticForm& f);

/// Numeric value of a closed form, evaluated in binary128 and rounded.
double eval_form(const EllipticForm& f, double h);

/// Exact limit at h = 2 for forms whose K-coefficient vanishes there (the
/// odd-power integrals): the K term dies and E(1) = 1.
double separatrix_limit(const EllipticForm& f);

/// A form with its coefficients pre-rounded to binary128, for repeated
/// evaluation during zero scans.
class FormEvaluator {
public:
    explicit FormEvaluator(const EllipticForm& f);

    Wide wide(double h) const;
    double operator()(double h) const { return wide(h).convert_to<double>(); }
    Region region() const noexcept { return region_; }

private:
    Region region_;
    std::vector<Wide> z_, p_, q_;
    bool sqrt_h_;
    Wide z_scale_, ke_scale_;
    int denom_power_;
};

}  // namespace pendmel
