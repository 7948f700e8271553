#pragma once

#include <gmpxx.h>

#include <string>

namespace jacgb {

// Exact arbitrary-precision arithmetic. GMP keeps rationals canonical
// (reduced, denominator >= 1), which is the invariant everything else
// relies on.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den, canonicalized. den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "num" or "num/den" in base 10. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical textual form, "num" or "num/den"; inverse of
// rational_from_string.
std::string to_string(const Rational& q);

// q^e for e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

// Generalized binomial coefficient q(q-1)...(q-k+1)/k!.
Rational genbinom(const Rational& q, unsigned long k);

double to_double(const Rational& q);

}  // namespace jacgb
