#include "agq/rational.hpp"

#include <stdexcept>

namespace agq {

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational rational_pow(const Rational& value, long e) {
  if (e == 0) return 1;
  if (value == 0 && e < 0) throw std::domain_error("0^negative");
  Rational base = e > 0 ? value : Rational(1) / value;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  Rational acc = 1;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace agq
