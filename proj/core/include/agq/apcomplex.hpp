#pragma once

#include "agq/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace agq {

// Arbitrary-precision binary float with per-thread default precision.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Sets the thread's working precision in bits (plus nothing else --
// callers add their own guard bits). Returns the digits10 used.
void set_working_precision_bits(int bits);

BigFloat bigfloat_from(const Rational& value);
BigFloat bigfloat_pi();

// Complex value on top of BigFloat. Principal branches throughout.
struct APComplex {
  BigFloat re;
  BigFloat im;

  APComplex() : re(0), im(0) {}
  APComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit APComplex(long r) : re(r), im(0) {}

  APComplex operator-() const { return {-re, -im}; }
  APComplex operator+(const APComplex& o) const { return {re + o.re, im + o.im}; }
  APComplex operator-(const APComplex& o) const { return {re - o.re, im - o.im}; }
  APComplex operator*(const APComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  APComplex operator*(const BigFloat& s) const { return {re * s, im * s}; }
  APComplex operator/(const APComplex& o) const;
  APComplex& operator+=(const APComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  APComplex& operator-=(const APComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  APComplex& operator*=(const APComplex& o) {
    *this = *this * o;
    return *this;
  }

  APComplex conj() const { return {re, -im}; }
  BigFloat abs2() const { return re * re + im * im; }
  BigFloat abs() const;
};

// e^{i theta}
APComplex unit_phase(const BigFloat& theta);
// e^z
APComplex complex_exp(const APComplex& z);
// principal square root
APComplex complex_sqrt(const APComplex& z);
// principal z^{3/2} = z * sqrt(z)
APComplex complex_pow_3_2(const APComplex& z);
// integer power (e >= 0)
APComplex complex_pow(const APComplex& z, unsigned long e);

std::string bigfloat_to_hex(const BigFloat& v);
std::string bigfloat_to_dec(const BigFloat& v, int digits = 30);

}  // namespace agq
