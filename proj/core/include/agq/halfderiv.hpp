#pragma once

#include "agq/rational.hpp"
#include "agq/report.hpp"
#include "agq/tseries.hpp"

namespace agq {

// t-expansion of the tail-sum series at q = e^{-t}:
// sum over 0 <= k_1, ..., k_m (chain-ordered, with the slack link at a)
// of (q)_{k_m} q^{k_1^2+...+k_{m-1}^2 + k_{a+1}+...+k_{m-1}} prod brackets,
// mod t^{D+1}. (e^{-t})_{k_m} has t-order exactly k_m, so k_m <= D suffices.
TSeries x_multisum_tseries(int m, int a, int D);

// e^{(2m-2a-1)^2 t / (8(2m+1))} sum_{n<=D} T(n)/n! (t/(8(2m+1)))^n
// with T(n) the Bernoulli-route values.
TSeries x_lvalue_tseries(int m, int a, int D);

struct XSeriesResult {
  int m = 0;
  int a = 0;
  int order = 0;
  TSeries lhs;  // multi-sum route
  TSeries rhs;  // L-value route
  int equal_through = -1;

  bool passed() const { return equal_through == order; }
};

// Exact coefficientwise comparison of the two routes through t^D.
XSeriesResult verify_theorem(int m, int a, int D);

// Convergent theta-type sum -1/2 sum n chi(n) e^{-(n^2-c^2) t0 / (8(2m+1))}
// against the truncated t-expansion at t0; residual vs the first omitted
// term magnitude.
Report half_derivative_numeric_check(int m, int a, const Rational& t0,
                                     int terms, int precision_bits);

}  // namespace agq
