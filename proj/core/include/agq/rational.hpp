#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace agq {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// we need for coefficient arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational rational_from_string(const std::string& text);

// "p/q" for non-integers, "p" otherwise.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// value^e with e possibly negative (value must be nonzero then).
Rational rational_pow(const Rational& value, long e);

}  // namespace agq
