#include "pendmel/fourier.hpp"

#include "pendmel/errors.hpp"

#include <cmath>
#include <mutex>

namespace pendmel {

namespace {

void trim(std::vector<Rational>& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

void add_into(std::vector<Rational>& dst, const std::vector<Rational>& src, const Rational& c = 1)
{
    if (dst.size() < src.size())
        dst.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] += c * src[i];
    trim(dst);
}

}  // namespace

FourierPoly FourierPoly::cosine(int i, const Rational& c)
{
    if (i < 0)
        throw ArgumentError("negative Fourier frequency");
    FourierPoly f;
    f.cos.assign(static_cast<std::size_t>(i) + 1, Rational(0));
    f.cos.back() = c;
    trim(f.cos);
    return f;
}

FourierPoly FourierPoly::sine(int i, const Rational& c)
{
    if (i < 1)
        throw ArgumentError("sine frequencies start at 1");
    FourierPoly f;
    f.sin.assign(static_cast<std::size_t>(i), Rational(0));
    f.sin.back() = c;
    trim(f.sin);
    return f;
}

int FourierPoly::degree() const
{
    int d = -1;
    for (std::size_t i = 0; i < cos.size(); ++i)
        if (cos[i] != 0)
            d = static_cast<int>(i);
    for (std::size_t i = 0; i < sin.size(); ++i)
        if (sin[i] != 0)
            d = std::max(d, static_cast<int>(i) + 1);
    return d;
}

bool FourierPoly::even_part_is_zero() const
{
    for (const auto& b : cos)
        if (b != 0)
            return false;
    return true;
}

double FourierPoly::operator()(double x) const
{
    double acc = 0;
    for (std::size_t i = 0; i < cos.size(); ++i)
        acc += to_double(cos[i]) * std::cos(static_cast<double>(i) * x);
    for (std::size_t i = 0; i < sin.size(); ++i)
        acc += to_double(sin[i]) * std::sin(static_cast<double>(i + 1) * x);
    return acc;
}

RationalPoly FourierPoly::even_part_in_cos() const
{
    RationalPoly out;
    for (std::size_t i = 0; i < cos.size(); ++i)
        if (cos[i] != 0)
            out += cos[i] * chebyshev_T(static_cast<int>(i));
    return out;
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& rhs)
{
    add_into(sin, rhs.sin);
    add_into(cos, rhs.cos);
    return *this;
}

FourierPoly operator*(const Rational& c, FourierPoly f)
{
    for (auto& a : f.sin)
        a *= c;
    for (auto& b : f.cos)
        b *= c;
    trim(f.sin);
    trim(f.cos);
    return f;
}

const RationalPoly& chebyshev_T(int n)
{
    if (n < 0)
        throw ArgumentError("chebyshev_T needs n >= 0");
    static std::mutex mutex;
    static std::vector<RationalPoly> table{RationalPoly::constant(1), RationalPoly::monomial(1)};
    std::lock_guard lock(mutex);
    const RationalPoly two_u = RationalPoly::monomial(1, 2);
    while (static_cast<int>(table.size()) <= n) {
        const std::size_t k = table.size();
        table.push_back(two_u * table[k - 1] - table[k - 2]);
    }
    return table[static_cast<std::size_t>(n)];
}

int Perturbation::max_power() const
{
    int m = -1;
    for (const auto& [s, q] : terms)
        if (!q.is_zero())
            m = std::max(m, s);
    return m;
}

int Perturbation::max_degree() const
{
    int n = -1;
    for (const auto& [s, q] : terms)
        n = std::max(n, q.degree());
    return n;
}

double Perturbation::operator()(double x, double y) const
{
    double acc = 0;
    for (const auto& [s, q] : terms)
        acc += q(x) * std::pow(y, s);
    return acc;
}

Perturbation& Perturbation::add(int power, const FourierPoly& q)
{
    if (power < 0)
        throw ArgumentError("powers of y must be nonnegative");
    terms[power] += q;
    return *this;
}

Perturbation operator+(Perturbation a, const Perturbation& b)
{
    for (const auto& [s, q] : b.terms)
        a.add(s, q);
    return a;
}

Perturbation operator*(const Rational& c, Perturbation p)
{
    for (auto& [s, q] : p.terms)
        q = c * q;
    return p;
}

}  // namespace pendmel
