#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace anharmonic {

using BigInt = boost::multiprecision::mpz_int;

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator; the canonical zero is 0/1.
using Rational = boost::multiprecision::mpq_rational;

/// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

} // namespace anharmonic
