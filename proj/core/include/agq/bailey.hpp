#pragma once

#include "agq/rational.hpp"
#include "agq/report.hpp"

#include <vector>

namespace agq {

// A pair of finite sequences linked by
// beta_n = sum_{r=0}^{n} alpha_r / ((q)_{n-r} (xq)_{n+r})
// at a rational evaluation point (q, x), not a formal variable.
struct BaileyPair {
  int n_max = 0;
  std::vector<Rational> alpha;  // alpha_0 .. alpha_{n_max}
  std::vector<Rational> beta;   // beta_0 .. beta_{n_max}
  Rational x;
  Rational q;
};

// Exact check of the defining relation for all 0 <= n <= n_max.
bool bailey_pair_holds(const BaileyPair& pair);

// Derives beta from alpha at (q, x).
BaileyPair make_bailey_pair(std::vector<Rational> alpha, const Rational& x,
                            const Rational& q);

// Seeded random instances of the transport step (alpha', beta' stay a
// pair), its iterated corollary, and the two symmetrized bilateral forms,
// all evaluated exactly at rational points with |q|, |x| <= 1/2 and
// |rho_1|, |rho_2| >= 2 so that no denominator vanishes. The remaining
// half-integer-exponent identities (the (q)_{n+k-1} -> (q)_{n+k} relation
// and the delta_{n,0} sum) are checked as truncated formal series.
Report verify_bailey_machinery(int n_max, int samples, long seed);

}  // namespace agq
