#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/float128.hpp>

#include <string>
#include <string_view>

namespace pendmel {

using Rational = mpq_class;
using Integer = mpz_class;

// Binary128 floating point, used wherever closed forms are evaluated: the
// polynomial/elliptic combinations cancel heavily for large h.
using Wide = boost::multiprecision::float128;

// Always "num/den", e.g. "3/1", "-2/5".
std::string to_string(const Rational& q);

// Accepts "a", "a/b", or a decimal literal such as "-0.25" or "1e-3"
// (decimals are converted exactly).
Rational parse_rational(std::string_view text);

// Exact conversion; every finite double is a dyadic rational.
Rational exact_rational(double x);

double to_double(const Rational& q);
Wide to_wide(const Rational& q);
Wide to_wide(const Integer& z);

Integer binomial(int n, int k);

}  // namespace pendmel
