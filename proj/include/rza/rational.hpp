#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rza {

// Exact rationals are GMP's mpq_class. Every value handed out by this library
// is canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" with optional leading sign. Throws InputError.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace rza
