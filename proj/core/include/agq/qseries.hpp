#pragma once

#include "agq/tseries.hpp"

#include <vector>

namespace agq {

// (q)_n = prod_{i=1}^{n} (1 - q^i), truncated to the given q-order.
TSeries pochhammer_q(int n, int order);

// 1 / (q)_n as a truncated series.
TSeries inverse_pochhammer_q(int n, int order);

// Exact Gaussian binomial [n over c]: a polynomial of degree c(n-c)
// with non-negative integer coefficients; zero when c < 0 or c > n.
// Memoized per process; safe to call concurrently.
TSeries qbinomial(int n, int c);

// qbinomial truncated (or zero-padded) to the given order.
TSeries qbinomial_truncated(int n, int c, int order);

// prod (1 - q^e) over the given exponents, truncated (factors with
// e > order are lossless to drop).
TSeries product_one_minus(const std::vector<int>& exponents, int order);

// (q^first; q^step)_infty truncated: factors 1 - q^{first + k step}.
TSeries infinite_product(int first, int step, int order);

// (q)_infty truncated.
TSeries euler_product(int order);

// sum_{i>=1} q^i / (1 - q^i) truncated; coefficient of q^n is d(n).
TSeries lambert_series(int order);

// Partial sum_{i=1}^{k} q^i / (1 - q^i) truncated.
TSeries lambert_partial(int k, int order);

// Shared per-order cache of 1/(q)_k for the multi-sum verifiers.
class InversePochhammerCache {
 public:
  explicit InversePochhammerCache(int order) : order_(order) {}
  const TSeries& get(int n);

 private:
  int order_;
  std::vector<TSeries> table_;
};

}  // namespace agq
