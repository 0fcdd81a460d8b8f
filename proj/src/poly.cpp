#include "pendmel/poly.hpp"

#include "pendmel/errors.hpp"

#include <sstream>

namespace pendmel {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs)
    : RationalPoly(std::vector<Rational>(coeffs))
{
}

RationalPoly RationalPoly::constant(const Rational& c)
{
    return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(int degree, const Rational& c)
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::linear(const Rational& a, const Rational& b)
{
    return RationalPoly({b, a});
}

void RationalPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational RationalPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::leading() const
{
    if (is_zero())
        return 0;
    return coeffs_.back();
}

RationalPoly RationalPoly::derivative() const
{
    if (degree() < 1)
        return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::compose_affine(const Rational& a, const Rational& b) const
{
    return compose(linear(a, b));
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const
{
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

Rational RationalPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double RationalPoly::operator()(double x) const
{
    return horner(pendmel::to_wide(*this), Wide(x)).convert_to<double>();
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

RationalPoly RationalPoly::operator-() const
{
    RationalPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& num, const RationalPoly& den)
{
    if (den.is_zero())
        throw ZeroPolynomialError();
    if (num.degree() < den.degree())
        return {RationalPoly{}, num};

    std::vector<Rational> rem = num.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
    const Rational& lead = den.coeffs_.back();
    const int dd = den.degree();
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rational factor = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= factor * den.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::exact_div(const RationalPoly& den) const
{
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero())
        throw ArgumentError("polynomial division is not exact");
    return q;
}

bool RationalPoly::divisible_by(const RationalPoly& den) const
{
    return divmod(*this, den).second.is_zero();
}

RationalPoly RationalPoly::primitive() const
{
    if (is_zero())
        return {};
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c == 0)
            continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    return *this * Rational(den_lcm, num_gcd);
}

RationalPoly RationalPoly::abs_monic() const
{
    if (is_zero())
        return {};
    return *this * Rational(1 / abs(leading()));
}

std::string RationalPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        if (!first)
            out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            out << "-";
        Rational a = abs(c);
        if (i == 0 || a != 1)
            out << a.get_str() << (i > 0 ? "*" : "");
        if (i >= 1)
            out << var;
        if (i >= 2)
            out << "^" << i;
        first = false;
    }
    return out.str();
}

RationalPoly pow(const RationalPoly& base, int exponent)
{
    RationalPoly out = RationalPoly::constant(1);
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

std::vector<Wide> to_wide(const RationalPoly& p)
{
    std::vector<Wide> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(to_wide(c));
    return out;
}

}  // namespace pendmel
