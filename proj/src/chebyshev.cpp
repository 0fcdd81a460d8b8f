#include "pendmel/chebyshev.hpp"

#include "pendmel/errors.hpp"
#include "pendmel/sturm.hpp"

#include <map>
#include <mutex>

namespace pendmel {

Integer k_constant(int m)
{
    if (m < 0)
        throw ArgumentError("K(m) needs m >= 0");
    Integer k = 1;
    for (int i = 0; i < m; ++i)
        k *= -(2 * i + 1);
    return k;
}

namespace {

struct PjmTable {
    std::mutex mutex;
    std::map<int, std::vector<RationalPoly>> rows;  // rows[m][j - m] = P_{j,m}
};

PjmTable& pjm_table()
{
    static PjmTable table;
    return table;
}

}  // namespace

RationalPoly pjm(int j, int m)
{
    if (m < 0 || j < m)
        throw ArgumentError("P_{j,m} needs j >= m >= 0");
    auto& table = pjm_table();
    std::lock_guard lock(table.mutex);
    auto& row = table.rows[m];
    if (row.empty())
        row.push_back(RationalPoly::constant(Rational(k_constant(m))));
    const RationalPoly u = RationalPoly::monomial(1);
    while (static_cast<int>(row.size()) <= j - m) {
        const int jj = m + static_cast<int>(row.size()) - 1;
        const RationalPoly& p = row.back();
        row.push_back(-(p.derivative() * one_minus_u2()) - Rational(2 * jj + 1) * (u * p));
    }
    return row[static_cast<std::size_t>(j - m)];
}

TrigRational reduce_integrand(const RationalPoly& even_in_u, int shift)
{
    if (shift < 0)
        throw ArgumentError("reduce_integrand needs shift >= 0");
    return apply_L(TrigRational(even_in_u, 0), shift);
}

TheoremBReduction theorem_b_reduction(const std::vector<PowerTerm>& terms, int n)
{
    if (terms.empty())
        throw ArgumentError("theorem_b_reduction needs at least one term");
    int lo = terms.front().power;
    int hi = lo;
    int degree = 0;
    for (const auto& t : terms) {
        if (t.power < 0 || t.power % 2 == 0)
            throw ArgumentError("theorem_b_reduction takes odd powers of y only");
        lo = std::min(lo, t.power);
        hi = std::max(hi, t.power);
        degree = std::max(degree, t.poly.degree());
    }
    TheoremBReduction out;
    out.n = n >= 0 ? n : degree;
    if (degree > out.n)
        throw ArgumentError("a term has degree above n");
    out.ell = lo;
    out.r = (hi - lo) / 2;
    out.exponent = out.ell + 2 * out.n + 2 * out.r;
    out.hypothesis_holds = 2 * out.r < out.ell + 3;
    for (const auto& t : terms) {
        const int s = (t.power - out.ell) / 2;
        const int lifts = out.n + out.r - s;
        const TrigRational lifted = reduce_integrand(t.poly, lifts);
        const RationalPoly term = lifted.numerator() * pow(one_minus_u2(), s);
        Rational weight = 1;
        for (int k = t.power + 2; k <= out.exponent; k += 2)
            weight /= k;
        out.r_poly += term;
        out.weighted += weight * term;
    }
    return out;
}

namespace {

// One more than the default ECT cap: pnova_check(r) needs r + 1 functions.
constexpr std::size_t max_wronskian_size = default_ect_cap + 1;

}  // namespace

std::vector<TrigRational> leading_wronskians(const std::vector<TrigRational>& fs)
{
    const std::size_t k = fs.size();
    if (k == 0 || k > max_wronskian_size)
        throw ArgumentError("Wronskians take between 1 and " + std::to_string(max_wronskian_size) + " functions");

    // a[i][j]: numerator of the i-th derivative of f_j, over sin^(p_j + i)
    std::vector<std::vector<RationalPoly>> a(k, std::vector<RationalPoly>(k));
    for (std::size_t j = 0; j < k; ++j) {
        TrigRational d = fs[j];
        for (std::size_t i = 0; i < k; ++i) {
            a[i][j] = d.numerator();
            if (i + 1 < k)
                d = diff_x(d);
        }
    }

    std::vector<TrigRational> out;
    int power = 0;
    RationalPoly previous = RationalPoly::constant(1);
    for (std::size_t t = 0; t < k; ++t) {
        power += fs[t].sin_power() + static_cast<int>(t);
        // a[t][t] is now the leading (t+1) x (t+1) minor
        out.emplace_back(a[t][t], power);
        if (a[t][t].is_zero()) {
            // f_0..f_t are dependent, and so is every longer prefix
            for (std::size_t rest = t + 1; rest < k; ++rest) {
                power += fs[rest].sin_power() + static_cast<int>(rest);
                out.emplace_back(RationalPoly(), power);
            }
            break;
        }
        for (std::size_t i = t + 1; i < k; ++i) {
            for (std::size_t j = t + 1; j < k; ++j)
                a[i][j] = (a[t][t] * a[i][j] - a[i][t] * a[t][j]).exact_div(previous);
        }
        previous = a[t][t];
    }
    return out;
}

TrigRational wronskian(const std::vector<TrigRational>& fs)
{
    return leading_wronskians(fs).back();
}

std::string_view to_string(CertificateStatus status)
{
    switch (status) {
    case CertificateStatus::Pass: return "PASS";
    case CertificateStatus::Fail: return "FAIL";
    case CertificateStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Certificate certify_ect(const std::vector<TrigRational>& fs, int v)
{
    Certificate cert;
    cert.functions = static_cast<int>(fs.size());
    cert.v = v;
    cert.side_condition = cert.functions < v + 2;

    const auto ws = leading_wronskians(fs);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const int order = static_cast<int>(i) + 1;
        if (ws[i].is_zero())
            throw ZeroWronskianError(order);
        WronskianOrder w;
        w.order = order;
        w.numerator = ws[i].numerator();
        w.sin_power = ws[i].sin_power();
        const EndpointStripped stripped = strip_unit_endpoint_roots(w.numerator);
        w.factors_at_minus_one = stripped.factors_at_minus_one;
        w.factors_at_plus_one = stripped.factors_at_plus_one;
        w.roots_in_interval = stripped.reduced.degree() <= 0 ? 0 : sturm_count(stripped.reduced, -1, 1);
        if (w.roots_in_interval == 0)
            w.sign = sgn(w.numerator(Rational(0)));
        if (w.roots_in_interval > 0 && cert.first_failure == 0)
            cert.first_failure = order;
        cert.orders.push_back(std::move(w));
    }

    if (!cert.side_condition) {
        cert.status = CertificateStatus::Fail;
        cert.message = "side condition violated: " + std::to_string(cert.functions) + " functions, v = "
                       + std::to_string(v);
    } else if (cert.first_failure != 0) {
        cert.status = CertificateStatus::Inconclusive;
        cert.message = "Wronskian of order " + std::to_string(cert.first_failure) + " has roots in (-1, 1)";
    } else {
        cert.status = CertificateStatus::Pass;
        cert.message = "all Wronskians are root-free on (-1, 1)";
    }
    return cert;
}

Certificate pnova_check(int r, int cap)
{
    if (r < 0 || r > cap)
        throw ArgumentError("r must lie in [0, " + std::to_string(cap) + "]");
    std::vector<TrigRational> fs;
    TrigRational f = TrigRational::constant(1);
    for (int i = 0; i <= r; ++i) {
        fs.emplace_back(f.numerator(), f.sin_power() + 1);
        f = apply_L(f);
    }
    return certify_ect(fs, r + 1);
}

}  // namespace pendmel
