#include "agq/apcomplex.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace agq {

void set_working_precision_bits(int bits) {
  if (bits < 8) throw std::invalid_argument("precision must be >= 8 bits");
  // digits10 ~ bits * log10(2); round up and pad so mpfr gets >= bits.
  int digits10 = static_cast<int>(std::ceil(bits * 0.3010299956639812)) + 2;
  BigFloat::default_precision(digits10);
}

BigFloat bigfloat_from(const Rational& value) {
  BigFloat num(value.get_num().get_str());
  BigFloat den(value.get_den().get_str());
  return num / den;
}

BigFloat bigfloat_pi() {
  BigFloat pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi;
}

APComplex APComplex::operator/(const APComplex& o) const {
  BigFloat d = o.abs2();
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat APComplex::abs() const {
  using boost::multiprecision::hypot;
  return hypot(re, im);
}

APComplex unit_phase(const BigFloat& theta) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  return {cos(theta), sin(theta)};
}

APComplex complex_exp(const APComplex& z) {
  using boost::multiprecision::exp;
  BigFloat scale = exp(z.re);
  APComplex phase = unit_phase(z.im);
  return {scale * phase.re, scale * phase.im};
}

APComplex complex_sqrt(const APComplex& z) {
  using boost::multiprecision::atan2;
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  using boost::multiprecision::sqrt;
  BigFloat r = z.abs();
  if (r == 0) return APComplex(0);
  BigFloat theta = atan2(z.im, z.re);  // (-pi, pi]
  BigFloat root = sqrt(r);
  BigFloat half = theta / 2;
  return {root * cos(half), root * sin(half)};
}

APComplex complex_pow_3_2(const APComplex& z) { return z * complex_sqrt(z); }

APComplex complex_pow(const APComplex& z, unsigned long e) {
  APComplex acc(1);
  APComplex base = z;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

std::string bigfloat_to_hex(const BigFloat& v) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%Ra", v.backend().data()) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string bigfloat_to_dec(const BigFloat& v, int digits) {
  return v.str(digits, std::ios_base::scientific);
}

}  // namespace agq
