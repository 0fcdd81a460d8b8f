#include "pendmel/sturm.hpp"

#include "pendmel/errors.hpp"

namespace pendmel {

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p)
{
    if (p.is_zero())
        throw ZeroPolynomialError();
    std::vector<RationalPoly> seq;
    seq.push_back(p.abs_monic());
    if (p.degree() == 0)
        return seq;
    seq.push_back(p.derivative().abs_monic());
    while (true) {
        const auto& prev = seq[seq.size() - 2];
        const auto& last = seq.back();
        RationalPoly rem = RationalPoly::divmod(prev, last).second;
        if (rem.is_zero())
            break;
        seq.push_back((-rem).abs_monic());
    }
    return seq;
}

namespace {

int sign_changes(const std::vector<RationalPoly>& seq, const Rational& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& q : seq) {
        int s = sgn(q(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const RationalPoly& p, const Rational& a, const Rational& b)
{
    if (p.is_zero())
        throw ZeroPolynomialError();
    if (!(a < b))
        throw ArgumentError("sturm_count needs a < b");
    if (p(a) == 0 || p(b) == 0)
        throw EndpointRootError("polynomial vanishes at an interval endpoint");
    auto seq = sturm_sequence(p);
    return sign_changes(seq, a) - sign_changes(seq, b);
}

EndpointStripped strip_unit_endpoint_roots(const RationalPoly& p)
{
    if (p.is_zero())
        throw ZeroPolynomialError();
    EndpointStripped out{p};
    const RationalPoly u_minus_one = RationalPoly::linear(1, -1);
    const RationalPoly u_plus_one = RationalPoly::linear(1, 1);
    while (out.reduced(Rational(1)) == 0) {
        out.reduced = out.reduced.exact_div(u_minus_one);
        ++out.factors_at_plus_one;
    }
    while (out.reduced(Rational(-1)) == 0) {
        out.reduced = out.reduced.exact_div(u_plus_one);
        ++out.factors_at_minus_one;
    }
    return out;
}

int roots_in_unit_interval(const RationalPoly& p)
{
    return sturm_count(strip_unit_endpoint_roots(p).reduced, Rational(-1), Rational(1));
}

}  // namespace pendmel
