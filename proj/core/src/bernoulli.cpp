#include "agq/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace agq {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // guarded by g_bernoulli_mutex

// Fills the memo table through index n using
// sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
void fill_locked(unsigned n) {
  if (g_bernoulli.empty()) g_bernoulli.push_back(1);
  for (unsigned i = g_bernoulli.size(); i <= n; ++i) {
    Rational acc = 0;
    for (unsigned k = 0; k < i; ++k) {
      acc += Rational(binomial(i + 1, k)) * g_bernoulli[k];
    }
    g_bernoulli.push_back(-acc / Rational(i + 1));
  }
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  fill_locked(n);
  return g_bernoulli[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  std::vector<Rational> numbers(n + 1);
  {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    fill_locked(n);
    for (unsigned k = 0; k <= n; ++k) numbers[k] = g_bernoulli[k];
  }
  // Horner in x over k: B_n(x) = sum_k C(n,k) B_k x^{n-k}.
  Rational acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc * x + Rational(binomial(n, k)) * numbers[k];
  }
  return acc;
}

}  // namespace agq
