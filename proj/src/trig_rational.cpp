#include "pendmel/trig_rational.hpp"

#include "pendmel/errors.hpp"

#include <cmath>

namespace pendmel {

const RationalPoly& one_minus_u2()
{
    static const RationalPoly poly({Rational(1), Rational(0), Rational(-1)});
    return poly;
}

TrigRational::TrigRational(RationalPoly numerator, int sin_power)
    : numerator_(std::move(numerator)), sin_power_(sin_power)
{
    if (sin_power_ < 0)
        throw ArgumentError("negative sine power");
}

double TrigRational::operator()(double x) const
{
    return numerator_(std::cos(x)) / std::pow(std::sin(x), sin_power_);
}

TrigRational TrigRational::canonical() const
{
    if (numerator_.is_zero())
        return {};
    TrigRational out = *this;
    while (out.sin_power_ >= 2 && out.numerator_.divisible_by(one_minus_u2())) {
        out.numerator_ = out.numerator_.exact_div(one_minus_u2());
        out.sin_power_ -= 2;
    }
    return out;
}

TrigRational TrigRational::lifted_to(int target) const
{
    if (target < sin_power_ || (target - sin_power_) % 2 != 0)
        throw ArgumentError("cannot lift sine power " + std::to_string(sin_power_) + " to "
                            + std::to_string(target));
    return {numerator_ * pow(one_minus_u2(), (target - sin_power_) / 2), target};
}

namespace {

int common_power(const TrigRational& a, const TrigRational& b)
{
    if (a.is_zero())
        return b.sin_power();
    if (b.is_zero())
        return a.sin_power();
    if ((a.sin_power() - b.sin_power()) % 2 != 0)
        throw ArgumentError("sum of N/sin^p terms with sine powers of different parity");
    return std::max(a.sin_power(), b.sin_power());
}

}  // namespace

TrigRational& TrigRational::operator+=(const TrigRational& rhs)
{
    if (rhs.is_zero())
        return *this;
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    const int target = common_power(*this, rhs);
    *this = TrigRational(lifted_to(target).numerator_ + rhs.lifted_to(target).numerator_, target);
    return *this;
}

TrigRational& TrigRational::operator-=(const TrigRational& rhs)
{
    return *this += Rational(-1) * rhs;
}

TrigRational operator*(const TrigRational& a, const TrigRational& b)
{
    return {a.numerator_ * b.numerator_, a.sin_power_ + b.sin_power_};
}

TrigRational operator*(const Rational& c, TrigRational f)
{
    f.numerator_ *= c;
    return f;
}

TrigRational TrigRational::times_cos() const
{
    return {numerator_ * RationalPoly::monomial(1), sin_power_};
}

bool operator==(const TrigRational& a, const TrigRational& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    if ((a.sin_power_ - b.sin_power_) % 2 != 0)
        return false;
    const int target = std::max(a.sin_power_, b.sin_power_);
    return a.lifted_to(target).numerator_ == b.lifted_to(target).numerator_;
}

std::string TrigRational::to_string() const
{
    std::string num = "(" + numerator_.to_string("u") + ")";
    if (sin_power_ == 0)
        return num;
    return num + "/sin^" + std::to_string(sin_power_);
}

TrigRational diff_x(const TrigRational& f)
{
    const RationalPoly& n = f.numerator();
    const int p = f.sin_power();
    RationalPoly num = -(n.derivative() * one_minus_u2()) - Rational(p) * (RationalPoly::monomial(1) * n);
    return {std::move(num), p + 1};
}

TrigRational apply_L(const TrigRational& f)
{
    const RationalPoly& n = f.numerator();
    const int p = f.sin_power();
    RationalPoly num = -(n.derivative() * one_minus_u2()) - Rational(p + 1) * (RationalPoly::monomial(1) * n);
    return {std::move(num), p + 2};
}

TrigRational apply_L(const TrigRational& f, int times)
{
    TrigRational out = f;
    for (int i = 0; i < times; ++i)
        out = apply_L(out);
    return out;
}

}  // namespace pendmel
