#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lacuna {

using BigInt = mpz_class;

// Exact rational in canonical form: denominator > 0, gcd(num, den) = 1.
// mpq_class arithmetic keeps results canonical; anything built from raw
// parts must be canonicalize()d before it escapes.
using Rational = mpq_class;

// Thrown when a reciprocal of zero is requested (evaluation at a pole).
struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("reciprocal of zero") {}
};

// 10^k as an exact integer, k >= 0.
BigInt pow10(unsigned long k);

// Exact x^n with the generating-function convention 0^0 = 1.
Rational pow_rational(const Rational& x, unsigned long n);

// Accepts "p/q", integer literals, and plain decimal literals
// ("0.1" parses to exactly 1/10). Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

// "p" when the value is an integer, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace lacuna
