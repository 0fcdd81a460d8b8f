#include "pendmel/rational.hpp"

#include "pendmel/errors.hpp"

#include <cmath>
#include <string>

namespace pendmel {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Rational parse_decimal(std::string_view text)
{
    // sign, digits, optional fraction, optional exponent
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    int scale = 0;
    bool seen_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        seen_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            --scale;
            seen_digit = true;
        }
    }
    if (!seen_digit)
        throw ArgumentError("malformed number: '" + std::string(text) + "'");
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        std::string exponent(text.substr(pos));
        std::size_t used = 0;
        try {
            scale += std::stoi(exponent, &used);
        } catch (const std::exception&) {
            throw ArgumentError("malformed exponent in '" + std::string(text) + "'");
        }
        pos += used;
    }
    if (pos != text.size())
        throw ArgumentError("trailing characters in number '" + std::string(text) + "'");

    Integer mantissa(digits, 10);
    Integer ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
    Rational value = scale >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw ArgumentError("empty rational literal");

    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_decimal(text);

    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0)
        throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

Rational exact_rational(double x)
{
    if (!std::isfinite(x))
        throw ArgumentError("cannot convert a non-finite double to a rational");
    return Rational(x);
}

double to_double(const Rational& q)
{
    return to_wide(q).convert_to<double>();
}

Wide to_wide(const Integer& z)
{
    // Sum limbs from the most significant one down, scaling by 2^bits each time.
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    Wide acc = 0;
    const Wide base = boost::multiprecision::ldexp(Wide(1), GMP_NUMB_BITS);
    for (std::size_t i = limbs; i-- > 0;) {
        acc = acc * base + Wide(static_cast<unsigned long long>(mpz_getlimbn(z.get_mpz_t(), i)));
    }
    return sgn(z) < 0 ? -acc : acc;
}

Wide to_wide(const Rational& q)
{
    if (q == 0)
        return 0;
    // Normalise both parts into range before dividing so that huge
    // numerators and denominators do not overflow.
    const long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    Integer num = q.get_num();
    Integer den = q.get_den();
    long shift = 0;
    if (num_bits > 200) {
        mpz_fdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), num_bits - 200);
        shift += num_bits - 200;
    }
    if (den_bits > 200) {
        mpz_fdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), den_bits - 200);
        shift -= den_bits - 200;
    }
    Wide value = to_wide(num) / to_wide(den);
    return boost::multiprecision::ldexp(value, static_cast<int>(shift));
}

Integer binomial(int n, int k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace pendmel
