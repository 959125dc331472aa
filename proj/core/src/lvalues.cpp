#include "agq/lvalues.hpp"

#include "agq/apcomplex.hpp"
#include "agq/bernoulli.hpp"
#include "agq/tseries.hpp"

#include <stdexcept>

namespace agq {

namespace {

void check_ma(int m, int a) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (a < 0 || a > m - 1) throw std::invalid_argument("a out of range 0..m-1");
}

}  // namespace

Rational t_value_bernoulli(int m, int a, int n) {
  check_ma(m, a);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  PeriodicCharacter chi = chi_general(m, a);
  int p = chi.modulus();
  Rational sum = 0;
  for (int r = 1; r <= p; ++r) {
    int v = chi(r);
    if (v == 0) continue;
    sum += Rational(v) * bernoulli_polynomial(2 * n + 2, rational(r, p));
  }
  Rational factor = rational_pow(rational(2 * m + 1), 2 * n + 1) / Rational(n + 1);
  factor *= rational_pow(rational(16), n);
  if (n % 2 == 1) factor = -factor;
  return factor * sum;
}

Rational t_value_genfun(int m, int a, int n) {
  check_ma(m, a);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  int order = 2 * n + 1;
  // sh(2(a+1)x) and ch((2m+1)x) as exact Taylor polynomials in x
  TSeries num(Var::x, order);
  TSeries den(Var::x, order);
  Rational u = rational(2 * (a + 1));
  Rational v = rational(2 * m + 1);
  Rational upow = 1, vpow = 1, fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      fact *= Rational(k);
      upow *= u;
      vpow *= v;
    }
    if (k % 2 == 1) num.set(k, upow / fact);
    else den.set(k, vpow / fact);
  }
  TSeries ratio = num * den.inverse();
  Rational t = ratio[order] * Rational(factorial(order)) / 2;
  if (n % 2 == 1) t = -t;
  return t;
}

Rational l_value_negative(const PeriodicCharacter& chi, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  int p = chi.modulus();
  Rational sum = 0;
  for (int r = 1; r <= p; ++r) {
    int v = chi(r);
    if (v == 0) continue;
    sum += Rational(v) * bernoulli_polynomial(2 * n + 2, rational(r, p));
  }
  return Rational(-1) * rational_pow(rational(p), 2 * n + 1) * sum /
         Rational(2 * n + 2);
}

namespace {

// |L(-2k-1, chi) t0^k / k!| at working precision
BigFloat mellin_term_magnitude(const PeriodicCharacter& chi,
                               const BigFloat& t0f, int k) {
  using boost::multiprecision::abs;
  BigFloat l = bigfloat_from(l_value_negative(chi, k));
  BigFloat term = abs(l);
  for (int j = 1; j <= k; ++j) term *= t0f / j;
  return term;
}

}  // namespace

int mellin_optimal_terms(const PeriodicCharacter& chi, const Rational& t0,
                         int precision_bits) {
  if (t0 <= 0) throw std::invalid_argument("t0 must be positive");
  set_working_precision_bits(precision_bits + 64);
  BigFloat t0f = bigfloat_from(t0);
  BigFloat best = mellin_term_magnitude(chi, t0f, 0);
  int best_k = 0;
  // terms decrease then grow; stop after the first increase
  for (int k = 1; k <= 4000; ++k) {
    BigFloat mag = mellin_term_magnitude(chi, t0f, k);
    if (mag >= best) break;
    best = mag;
    best_k = k;
  }
  return best_k + 1;  // include terms 0..best_k
}

MellinCheck mellin_asymptotic_check(const PeriodicCharacter& chi,
                                    const Rational& t0, int terms,
                                    int precision_bits) {
  if (t0 <= 0) throw std::invalid_argument("t0 must be positive");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  set_working_precision_bits(precision_bits + 64);
  BigFloat t0f = bigfloat_from(t0);
  BigFloat cutoff = pow(BigFloat(2), -precision_bits);

  // lhs: theta-type sum, terms decay like e^{-n^2 t0}
  BigFloat lhs = 0;
  for (long n = 1;; ++n) {
    BigFloat envelope = BigFloat(n) * exp(-BigFloat(n) * n * t0f);
    if (n > 1 && envelope < cutoff) break;
    int v = chi(n);
    if (v != 0) lhs += v * envelope;
  }

  // rhs: truncated asymptotic series
  BigFloat rhs = 0;
  BigFloat tpow = 1;  // (-t0)^k / k!
  for (int k = 0; k < terms; ++k) {
    if (k > 0) tpow *= -t0f / k;
    rhs += bigfloat_from(l_value_negative(chi, k)) * tpow;
  }
  BigFloat omitted = mellin_term_magnitude(chi, t0f, terms);

  MellinCheck out;
  out.terms = terms;
  BigFloat residual = abs(lhs - rhs);
  out.lhs = bigfloat_to_dec(lhs);
  out.rhs = bigfloat_to_dec(rhs);
  out.residual = bigfloat_to_dec(residual);
  out.omitted_term = bigfloat_to_dec(omitted);
  out.within_bound = residual <= 2 * omitted;
  return out;
}

}  // namespace agq
