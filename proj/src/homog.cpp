#include "pendmel/homog.hpp"

#include "pendmel/errors.hpp"

#include <cmath>

namespace pendmel {

HomogPoly2::HomogPoly2(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs))
{
    if (degree_ < 0 || coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
        throw ArgumentError("homogeneous polynomial needs degree+1 coefficients");
}

double HomogPoly2::operator()(double t, double s) const
{
    double acc = 0;
    for (int i = 0; i <= degree_; ++i)
        acc += to_double(coeffs_[static_cast<std::size_t>(i)]) * std::pow(t, i) * std::pow(s, degree_ - i);
    return acc;
}

std::vector<RationalPoly> HomogPoly2::in_t(const RationalPoly& s) const
{
    std::vector<RationalPoly> out;
    out.reserve(coeffs_.size());
    for (int i = 0; i <= degree_; ++i)
        out.push_back(coeffs_[static_cast<std::size_t>(i)] * pow(s, degree_ - i));
    return out;
}

HomogPoly2 vm_recurrence(int m, const Rational& r)
{
    if (m < 0)
        throw ArgumentError("vm_recurrence needs m >= 0");
    for (int j = 0; j <= m; ++j)
        if (r + j + 1 == 0)
            throw ArgumentError("vm_recurrence: r + j + 1 vanishes");

    HomogPoly2 v(0, {Rational(1) / (r + 1)});
    for (int k = 1; k <= m; ++k) {
        // t^k - k s V_{k-1}: multiplying by s keeps the t-index, raises the degree.
        std::vector<Rational> next(static_cast<std::size_t>(k) + 1);
        next[static_cast<std::size_t>(k)] = 1;
        for (int i = 0; i < k; ++i)
            next[static_cast<std::size_t>(i)] -= Rational(k) * v.coeff(i);
        Rational scale = Rational(1) / (r + k + 1);
        for (auto& c : next) {
            c *= scale;
            c.canonicalize();
        }
        v = HomogPoly2(k, std::move(next));
    }
    return v;
}

}  // namespace pendmel
