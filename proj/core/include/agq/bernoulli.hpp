#pragma once

#include "agq/rational.hpp"

namespace agq {

// n-th Bernoulli number (B_1 = -1/2 convention). Memoized per process;
// safe to call concurrently.
Rational bernoulli_number(unsigned n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, evaluated exactly.
Rational bernoulli_polynomial(unsigned n, const Rational& x);

}  // namespace agq
