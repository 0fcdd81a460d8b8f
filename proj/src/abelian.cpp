#include "pendmel/abelian.hpp"

#include "pendmel/elliptic.hpp"
#include "pendmel/errors.hpp"
#include "pendmel/homog.hpp"

#include <boost/math/constants/constants.hpp>

#include <array>
#include <cmath>
#include <mutex>

namespace pendmel {

std::string_view to_string(Region region)
{
    switch (region) {
    case Region::Oscillatory: return "oscillatory";
    case Region::RotaryPlus: return "rotary_plus";
    case Region::RotaryMinus: return "rotary_minus";
    }
    return "?";
}

Region parse_region(std::string_view name)
{
    if (name == "oscillatory" || name == "osc" || name == "0")
        return Region::Oscillatory;
    if (name == "rotary_plus" || name == "plus" || name == "+")
        return Region::RotaryPlus;
    if (name == "rotary_minus" || name == "minus" || name == "-")
        return Region::RotaryMinus;
    throw ArgumentError("unknown region '" + std::string(name) + "'");
}

bool is_rotary(Region region)
{
    return region != Region::Oscillatory;
}

OpenInterval region_interval(Region region)
{
    if (region == Region::Oscillatory)
        return {0.0, 2.0};
    return {2.0, std::numeric_limits<double>::infinity()};
}

std::string_view to_string(Scalar s)
{
    switch (s) {
    case Scalar::One: return "1";
    case Scalar::Sqrt2: return "sqrt2";
    case Scalar::Pi: return "pi";
    }
    return "?";
}

Scalar parse_scalar(std::string_view name)
{
    if (name == "1")
        return Scalar::One;
    if (name == "sqrt2")
        return Scalar::Sqrt2;
    if (name == "pi")
        return Scalar::Pi;
    throw ArgumentError("unknown scalar '" + std::string(name) + "'");
}

namespace {

Wide scalar_value(Scalar s)
{
    switch (s) {
    case Scalar::One: return 1;
    case Scalar::Sqrt2: return boost::math::constants::root_two<Wide>();
    case Scalar::Pi: return boost::math::constants::pi<Wide>();
    }
    return 1;
}

Scalar merge_scalar(const RationalPoly& a, Scalar sa, const RationalPoly& b, Scalar sb)
{
    if (a.is_zero())
        return sb;
    if (b.is_zero() || sa == sb)
        return sa;
    throw ArgumentError("adding closed-form components with different irrational scalars");
}

// h - 1 as a polynomial in h
const RationalPoly& h_minus_one()
{
    static const RationalPoly poly = RationalPoly::linear(1, -1);
    return poly;
}

const RationalPoly& h_times_h_minus_two()
{
    static const RationalPoly poly({Rational(0), Rational(-2), Rational(1)});
    return poly;
}

}  // namespace

EllipticForm zero_form(Region region)
{
    EllipticForm f;
    f.region = region;
    f.sqrt_h = is_rotary(region);
    f.ke_scalar = region == Region::Oscillatory ? Scalar::Sqrt2 : Scalar::One;
    f.z_scalar = Scalar::Pi;
    return f;
}

EllipticForm operator+(const EllipticForm& a, const EllipticForm& b)
{
    if (a.region != b.region)
        throw ArgumentError("adding closed forms from different regions");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.denom_power != b.denom_power)
        throw ArgumentError("adding closed forms with different denominators");
    EllipticForm out = a;
    out.z_scalar = merge_scalar(a.z, a.z_scalar, b.z, b.z_scalar);
    const bool a_ke = a.has_elliptic_part();
    const bool b_ke = b.has_elliptic_part();
    if (a_ke && b_ke && a.ke_scalar != b.ke_scalar)
        throw ArgumentError("adding closed-form components with different irrational scalars");
    if (!a_ke)
        out.ke_scalar = b.ke_scalar;
    out.z += b.z;
    out.p += b.p;
    out.q += b.q;
    return out;
}

EllipticForm operator*(const Rational& c, const EllipticForm& f)
{
    EllipticForm out = f;
    out.z *= c;
    out.p *= c;
    out.q *= c;
    return out;
}

EllipticForm operator*(const RationalPoly& c, const EllipticForm& f)
{
    EllipticForm out = f;
    out.z *= c;
    out.p *= c;
    out.q *= c;
    return out;
}

EllipticForm operator-(const EllipticForm& a, const EllipticForm& b)
{
    return a + Rational(-1) * b;
}

EllipticForm times_sqrt2(const EllipticForm& f)
{
    EllipticForm out = f;
    if (!out.z.is_zero()) {
        if (out.z_scalar == Scalar::Pi)
            throw ArgumentError("sqrt(2)*pi is not a representable scalar");
        if (out.z_scalar == Scalar::One) {
            out.z_scalar = Scalar::Sqrt2;
        } else {
            out.z_scalar = Scalar::One;
            out.z *= Rational(2);
        }
    }
    if (out.has_elliptic_part()) {
        if (out.ke_scalar == Scalar::Pi)
            throw ArgumentError("sqrt(2)*pi is not a representable scalar");
        if (out.ke_scalar == Scalar::One) {
            out.ke_scalar = Scalar::Sqrt2;
        } else {
            out.ke_scalar = Scalar::One;
            out.p *= Rational(2);
            out.q *= Rational(2);
        }
    }
    return out;
}

std::pair<EllipticForm, EllipticForm> base_L0_L1(Region region)
{
    if (region == Region::RotaryMinus) {
        auto [l0, l1] = base_L0_L1(Region::RotaryPlus);
        l0 = Rational(-1) * l0;
        l1 = Rational(-1) * l1;
        l0.region = l1.region = Region::RotaryMinus;
        return {l0, l1};
    }
    EllipticForm l0 = zero_form(region);
    EllipticForm l1 = zero_form(region);
    if (region == Region::Oscillatory) {
        // sqrt2 ((h-2) K + 2 E),  (sqrt2/3) ((2-h) K + 2(h-1) E)
        l0.p = RationalPoly::linear(1, -2);
        l0.q = RationalPoly::constant(2);
        l1.p = RationalPoly::linear(Rational(-1, 3), Rational(2, 3));
        l1.q = RationalPoly::linear(Rational(2, 3), Rational(-2, 3));
    } else {
        // 2 sqrt(h) E,  (2/3) sqrt(h) ((2-h) K + (h-1) E)
        l0.q = RationalPoly::constant(2);
        l1.p = RationalPoly::linear(Rational(-2, 3), Rational(4, 3));
        l1.q = RationalPoly::linear(Rational(2, 3), Rational(-2, 3));
    }
    return {l0, l1};
}

namespace {

// L_0 .. L_n for the oscillatory (index 0) and rotary-plus (index 1) regions,
// grown on demand.
struct LnCache {
    std::mutex mutex;
    std::array<std::vector<EllipticForm>, 2> tables;
};

LnCache& ln_cache()
{
    static LnCache cache;
    return cache;
}

EllipticForm next_Ln(const std::vector<EllipticForm>& table, int n)
{
    const HomogPoly2 v = vm_recurrence(n - 2, Rational(1, 2));
    // w_i: coefficient of t^i s^(n-1-i) in (t + s) V_{n-2}(t, s)
    std::vector<Rational> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i - 1 >= 0)
            w[static_cast<std::size_t>(i)] += v.coeff(i - 1);
        if (i <= n - 2)
            w[static_cast<std::size_t>(i)] += v.coeff(i);
    }
    EllipticForm acc = table[static_cast<std::size_t>(n - 2)];
    for (int i = 0; i <= n - 2; ++i) {
        RationalPoly weight = w[static_cast<std::size_t>(i)] * pow(h_minus_one(), n - 1 - i);
        acc = acc - weight * table[static_cast<std::size_t>(i + 1)];
    }
    return Rational(2 * n - 1, 2 * n + 1) * acc;
}

}  // namespace

EllipticForm build_Ln(int n, Region region)
{
    if (n < 0)
        throw ArgumentError("build_Ln needs n >= 0");
    if (region == Region::RotaryMinus) {
        EllipticForm f = Rational(-1) * build_Ln(n, Region::RotaryPlus);
        f.region = Region::RotaryMinus;
        return f;
    }
    auto& cache = ln_cache();
    std::lock_guard lock(cache.mutex);
    auto& table = cache.tables[region == Region::Oscillatory ? 0 : 1];
    if (table.empty()) {
        auto [l0, l1] = base_L0_L1(region);
        table.push_back(l0);
        table.push_back(l1);
    }
    while (static_cast<int>(table.size()) <= n)
        table.push_back(next_Ln(table, static_cast<int>(table.size())));
    return table[static_cast<std::size_t>(n)];
}

EllipticForm build_I_odd(int n, int r, Region region)
{
    if (n < 0 || r < 0)
        throw ArgumentError("build_I_odd needs n, r >= 0");
    EllipticForm acc = zero_form(region);
    for (int i = 0; i <= r; ++i) {
        RationalPoly weight = Rational(binomial(r, i)) * pow(h_minus_one(), r - i);
        acc = acc + weight * build_Ln(n + i, region);
    }
    return acc;
}

Rational wallis(int m)
{
    if (m < 0)
        throw ArgumentError("wallis needs m >= 0");
    if (m % 2 == 1)
        return 0;
    Rational out = 1;
    for (int j = 2; j <= m; j += 2)
        out *= Rational(j - 1, j);
    return out;
}

EllipticForm build_I_even(int n, int s, Region region)
{
    if (n < 0 || s < 0)
        throw ArgumentError("build_I_even needs n, s >= 0");
    if (!is_rotary(region))
        throw ArgumentError("even-power integrals are polynomial only on the rotary region");
    EllipticForm out = zero_form(region);
    out.z_scalar = Scalar::Pi;
    for (int i = 0; i <= s; ++i)
        out.z += Rational(binomial(s, i)) * wallis(n + i) * pow(h_minus_one(), s - i);
    return out;
}

EllipticForm differentiate_form(const EllipticForm& f)
{
    EllipticForm out = f;
    if (!f.has_elliptic_part() && f.denom_power == 0) {
        out.z = f.z.derivative();
        return out;
    }
    const RationalPoly& D = h_times_h_minus_two();
    const RationalPoly dD = D.derivative();
    const RationalPoly h_minus_two = RationalPoly::linear(1, -2);
    const RationalPoly h = RationalPoly::monomial(1);
    const Rational half(1, 2);
    const Rational j(f.denom_power);

    RationalPoly kc;
    RationalPoly ec;
    if (is_rotary(f.region)) {
        // D * d/dh [sqrt(h)(P K + Q E)] / sqrt(h)
        kc = h_minus_two * f.p + D * f.p.derivative() + half * (h_minus_two * f.q);
        ec = D * f.q.derivative() - half * (h * f.p);
    } else {
        // D * d/dh [P K + Q E]
        kc = D * f.p.derivative() - half * (h_minus_two * f.p) - half * (h_minus_two * f.q);
        ec = D * f.q.derivative() - f.p + half * (h_minus_two * f.q);
    }
    out.p = kc - j * (dD * f.p);
    out.q = ec - j * (dD * f.q);
    out.z = D * f.z.derivative() - j * (dD * f.z);
    out.denom_power = f.denom_power + 1;
    return out;
}

FormEvaluator::FormEvaluator(const EllipticForm& f)
    : region_(f.region),
      z_(to_wide(f.z)),
      p_(to_wide(f.p)),
      q_(to_wide(f.q)),
      sqrt_h_(f.sqrt_h),
      z_scale_(scalar_value(f.z_scalar)),
      ke_scale_(scalar_value(f.ke_scalar)),
      denom_power_(f.denom_power)
{
}

Wide FormEvaluator::wide(double h) const
{
    const bool rotary = is_rotary(region_);
    if (!std::isfinite(h) || (rotary ? !(h > 2.0) : !(h > 0.0 && h < 2.0)))
        throw DomainError("h = " + std::to_string(h) + " is outside the " + std::string(to_string(region_))
                          + " region");
    if (std::abs(h - 2.0) < separatrix_exclusion)
        throw DomainError("h is too close to the separatrix h = 2");

    const Wide hw = h;
    Wide value = z_.empty() ? Wide(0) : z_scale_ * horner(z_, hw);
    if (!p_.empty() || !q_.empty()) {
        Wide k;
        Wide kc2;
        if (rotary) {
            k = sqrt(2 / hw);
            kc2 = (hw - 2) / hw;
        } else {
            k = sqrt(hw / 2);
            kc2 = (2 - hw) / 2;
        }
        auto ke = elliptic::agm<Wide>(k, kc2);
        Wide part = horner(p_, hw) * ke.K + horner(q_, hw) * ke.E;
        if (sqrt_h_)
            part *= sqrt(hw);
        value += ke_scale_ * part;
    }
    if (denom_power_ > 0)
        value /= boost::multiprecision::pow(hw * (hw - 2), denom_power_);
    return value;
}

double eval_form(const EllipticForm& f, double h)
{
    return FormEvaluator(f)(h);
}

double separatrix_limit(const EllipticForm& f)
{
    if (f.denom_power != 0)
        throw DomainError("separatrix limit is only defined for forms without denominators");
    if (f.p(Rational(2)) != 0)
        throw DomainError("K coefficient does not vanish at h = 2; the form diverges there");
    Wide value = scalar_value(f.z_scalar) * to_wide(f.z(Rational(2)));
    Wide ke = to_wide(f.q(Rational(2)));  // E(1) = 1
    if (f.sqrt_h)
        ke *= boost::math::constants::root_two<Wide>();
    value += scalar_value(f.ke_scalar) * ke;
    return value.convert_to<double>();
}

}  // namespace pendmel
