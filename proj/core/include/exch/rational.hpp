#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace exch {

// Exact arithmetic substrate. GMP-backed rationals stay canonical
// (denominator > 0, gcd-reduced) through every arithmetic operation.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parse "p/q" or "p". The result is canonicalized; q must be nonzero.
Rational parse_rational(const std::string& text);

/// Serialize as "p/q" with q > 0, or "p" when the value is integral.
std::string rational_str(const Rational& r);

double rational_double(const Rational& r);

BigInt factorial(int n);

} // namespace exch
