#pragma once

#include "agq/character.hpp"
#include "agq/rational.hpp"
#include "agq/report.hpp"

namespace agq {

// T_m^(a)(n) via the Bernoulli-polynomial formula:
// (-1)^n 16^n (2m+1)^{2n+1}/(n+1) sum_r chi(r) B_{2n+2}(r/(8m+4)).
Rational t_value_bernoulli(int m, int a, int n);

// T_m^(a)(n) via the generating function sh(2(a+1)x)/ch((2m+1)x):
// exact Taylor division, then (-1)^n (2n+1)!/2 times the x^{2n+1}
// coefficient. Fully independent of the character tables and of the
// Bernoulli code; the two routes are each other's oracle.
Rational t_value_genfun(int m, int a, int n);

// L(-2n-1, chi) = -(1/(2n+2)) p^{2n+1} sum_{r=1}^{p} chi(r) B_{2n+2}(r/p)
// for a mean-zero periodic chi.
Rational l_value_negative(const PeriodicCharacter& chi, int n);

struct MellinCheck {
  std::string lhs;            // decimal
  std::string rhs;            // decimal
  std::string residual;       // decimal |lhs - rhs|
  std::string omitted_term;   // magnitude of term #terms
  int terms = 0;
  bool within_bound = false;  // residual <= 2 * omitted_term
};

// Compares sum_n n chi(n) e^{-n^2 t0} against the truncated asymptotic
// series sum_k L(-2k-1, chi) (-t0)^k / k!. Requires terms >= 1 and t0 > 0.
MellinCheck mellin_asymptotic_check(const PeriodicCharacter& chi,
                                    const Rational& t0, int terms,
                                    int precision_bits);

// Index of the smallest-magnitude term of the asymptotic series at t0,
// i.e. the optimal truncation length.
int mellin_optimal_terms(const PeriodicCharacter& chi, const Rational& t0,
                         int precision_bits);

}  // namespace agq
