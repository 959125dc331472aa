#include "agq/qseries.hpp"

#include <mutex>
#include <stdexcept>

namespace agq {

TSeries pochhammer_q(int n, int order) {
  if (n < 0) throw std::invalid_argument("pochhammer_q: n must be >= 0");
  TSeries acc = TSeries::constant(Var::q, order, 1);
  for (int i = 1; i <= n && i <= order; ++i) {
    // multiply by (1 - q^i) in place of a full convolution
    TSeries next = acc;
    for (int d = 0; d + i <= order; ++d) next.add(d + i, -acc[d]);
    acc = std::move(next);
  }
  return acc;
}

TSeries inverse_pochhammer_q(int n, int order) {
  return pochhammer_q(n, order).inverse();
}

namespace {

std::mutex g_qbinomial_mutex;
// rows[n][c] with c <= n/2 (symmetry fills the rest)
std::vector<std::vector<TSeries>> g_qbinomial_rows;

const TSeries& qbinomial_locked(int n, int c) {
  while (static_cast<int>(g_qbinomial_rows.size()) <= n) {
    int row = static_cast<int>(g_qbinomial_rows.size());
    std::vector<TSeries> entries;
    for (int k = 0; k <= row / 2; ++k) {
      int degree = k * (row - k);
      TSeries value(Var::q, degree);
      if (k == 0) {
        value.set(0, 1);
      } else {
        // [row over k] = [row-1 over k] + q^{row-k} [row-1 over k-1]
        int ka = std::min(k, row - 1 - k);
        int kb = std::min(k - 1, row - k);
        const TSeries& a = g_qbinomial_rows[row - 1][ka];
        const TSeries& b = g_qbinomial_rows[row - 1][kb];
        for (int d = 0; d <= a.order(); ++d) value.add(d, a[d]);
        for (int d = 0; d <= b.order(); ++d) value.add(d + row - k, b[d]);
      }
      entries.push_back(std::move(value));
    }
    g_qbinomial_rows.push_back(std::move(entries));
  }
  return g_qbinomial_rows[n][std::min(c, n - c)];
}

}  // namespace

TSeries qbinomial(int n, int c) {
  if (c < 0 || c > n) return TSeries(Var::q, 0);
  std::lock_guard<std::mutex> lock(g_qbinomial_mutex);
  return qbinomial_locked(n, c);
}

TSeries qbinomial_truncated(int n, int c, int order) {
  return qbinomial(n, c).truncated(order);
}

TSeries product_one_minus(const std::vector<int>& exponents, int order) {
  TSeries acc = TSeries::constant(Var::q, order, 1);
  for (int e : exponents) {
    if (e <= 0) throw std::invalid_argument("factor exponent must be positive");
    if (e > order) continue;
    TSeries next = acc;
    for (int d = 0; d + e <= order; ++d) next.add(d + e, -acc[d]);
    acc = std::move(next);
  }
  return acc;
}

TSeries infinite_product(int first, int step, int order) {
  if (first <= 0 || step <= 0) {
    throw std::invalid_argument("infinite_product: positive first and step");
  }
  std::vector<int> exponents;
  for (int e = first; e <= order; e += step) exponents.push_back(e);
  return product_one_minus(exponents, order);
}

TSeries euler_product(int order) { return infinite_product(1, 1, order); }

TSeries lambert_series(int order) {
  TSeries s(Var::q, order);
  for (int i = 1; i <= order; ++i)
    for (int d = i; d <= order; d += i) s.add(d, 1);
  return s;
}

TSeries lambert_partial(int k, int order) {
  TSeries s(Var::q, order);
  for (int i = 1; i <= k && i <= order; ++i)
    for (int d = i; d <= order; d += i) s.add(d, 1);
  return s;
}

const TSeries& InversePochhammerCache::get(int n) {
  while (static_cast<int>(table_.size()) <= n) {
    table_.push_back(inverse_pochhammer_q(static_cast<int>(table_.size()), order_));
  }
  return table_[n];
}

}  // namespace agq
