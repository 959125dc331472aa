#include "agq/identities.hpp"

#include "agq/character.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace agq {

namespace {

std::string fmt(const char* a, int x) {
  std::ostringstream o;
  o << a << x;
  return o.str();
}

std::string loc_pair(const char* a, int x, const char* b, int y) {
  std::ostringstream o;
  o << "(" << a << "," << b << ")=(" << x << "," << y << ")";
  return o.str();
}

void check_ma(int m, int a, int m_min = 1) {
  if (m < m_min) throw std::invalid_argument("m out of range");
  if (a < 0 || a > m - 1) throw std::invalid_argument("a out of range 0..m-1");
}

// Ascending chains 0 <= k_1 <= ... <= k_n (k stored 0-based: k[i-1] = k_i)
// with one optional slack link k_slack <= k_{slack+1} + 1 for slack in
// [1, n-1]; k_n <= top (top < 0: bounded by the budget only);
// sum k_i(k_i-1) <= q_budget; 2 sum k_i <= x_budget (x_budget < 0: none).
void for_each_chain(int n, int slack, int top, long q_budget, long x_budget,
                    const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> k(n);
  std::function<void(int, long, long)> rec = [&](int i, long ql, long xl) {
    if (i == 0) {
      fn(k);
      return;
    }
    long lim;
    if (i == n) {
      if (top >= 0) {
        lim = top;
      } else {
        lim = 0;
        while ((lim + 1) * lim <= ql) ++lim;  // k(k-1) <= ql
      }
    } else {
      lim = k[i] + (i == slack ? 1 : 0);
    }
    for (int v = 0; v <= lim; ++v) {
      long qc = static_cast<long>(v) * (v - 1);
      if (qc > ql) break;
      if (x_budget >= 0 && 2L * v > xl) break;
      k[i - 1] = v;
      rec(i - 1, ql - qc, x_budget >= 0 ? xl - 2 * v : xl);
    }
  };
  rec(n, q_budget, x_budget);
}

// prod over i=1..m-1 of [upper_i over k_i] with upper_i = k_{i+1} (k_m given)
// plus one slack at i == a (upper_a = k_{a+1} + 1); a == 0 contributes the
// trivial [k_1+1 over 0] = 1.
TSeries bracket_chain(const std::vector<int>& kk, int km, int a, int order) {
  TSeries acc = TSeries::constant(Var::q, order, 1);
  int n = static_cast<int>(kk.size());
  for (int i = 1; i <= n; ++i) {
    int next = (i < n) ? kk[i] : km;
    int upper = next + (i == a ? 1 : 0);
    acc = acc * qbinomial_truncated(upper, kk[i - 1], order);
  }
  return acc;
}

// p * s with s a pure q-series.
BiPoly mul_q(const BiPoly& p, const TSeries& s) {
  BiPoly out(p.x_order(), p.q_order());
  int dq = p.q_order();
  int so = std::min(s.order(), dq);
  for (int j = 0; j <= p.x_order(); ++j) {
    for (int d1 = 0; d1 <= dq; ++d1) {
      const Rational& c = p.coeff(j, d1);
      if (c == 0) continue;
      for (int d2 = 0; d2 <= so && d1 + d2 <= dq; ++d2) {
        if (s[d2] == 0) continue;
        out.add(j, d1 + d2, c * s[d2]);
      }
    }
  }
  return out;
}

// prod_{i=lo}^{hi} (1 - q^i x), truncated to (dx, dq). Factors with i > dq
// act as 1 inside the window (their minimum q-degree exceeds it).
BiPoly poch_x_product(int lo, int hi, int dx, int dq) {
  BiPoly acc = BiPoly::constant(dx, dq, 1);
  for (int i = lo; i <= hi && i <= dq; ++i) acc -= acc.shifted(1, i);
  return acc;
}

// Support walk of the modulus-(8m+4) function: terms chi(n) w(n)
// q^{(n^2-c^2)/(8(2m+1))} with c = 2m-2a-1 and weight 1 or n/2.
TSeries chi_weighted_qseries(int m, int a, int order, bool half_n_weight) {
  PeriodicCharacter chi = chi_general(m, a);
  int c = 2 * m - 2 * a - 1;
  long denom = 8L * (2 * m + 1);
  TSeries s(Var::q, order);
  for (long n = 0;; ++n) {
    long num = n * n - static_cast<long>(c) * c;
    if (num > denom * order) break;
    int v = chi(n);
    if (v == 0) continue;
    if (num < 0 || num % denom != 0) {
      throw std::runtime_error("non-integral exponent in character sum");
    }
    Rational w = half_n_weight ? Rational(n, 2) : Rational(1);
    w.canonicalize();
    s.add(static_cast<int>(num / denom), Rational(v) * w);
  }
  return s;
}

// exponents of (q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf through `order`
std::vector<int> triple_product_exponents(int m, int a, int order) {
  std::vector<int> exps;
  int p = 2 * m + 1;
  for (int base : {a + 1, 2 * m - a, p}) {
    for (int e = base; e <= order; e += p) exps.push_back(e);
  }
  return exps;
}

void report_series_check(Report& rep, const char* check, const TSeries& lhs,
                         const TSeries& rhs) {
  if (auto d = TSeries::first_mismatch(lhs, rhs)) {
    rep.fail(check, fmt("q^", *d), rational_to_string(rhs[*d]),
             rational_to_string(lhs[*d]));
  } else {
    rep.ok(check);
  }
}

void report_bipoly_check(Report& rep, const char* check, const BiPoly& lhs,
                         const BiPoly& rhs) {
  if (auto d = BiPoly::first_mismatch(lhs, rhs)) {
    rep.fail(check, loc_pair("x", d->first, "q", d->second),
             rational_to_string(rhs.coeff(d->first, d->second)),
             rational_to_string(lhs.coeff(d->first, d->second)));
  } else {
    rep.ok(check);
  }
}

}  // namespace

Report verify_qbinomial_recurrences(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  Report rep;
  rep.name = "qbinomial-recurrences";
  rep.param("n-max", n_max);
  for (int n = 0; n < n_max; ++n) {
    for (int c = 0; c <= n + 1; ++c) {
      int deg = c * (n + 1 - c);
      TSeries lhs = qbinomial(n + 1, c).truncated(deg);
      TSeries low = (c >= 1) ? qbinomial(n, c - 1) : TSeries(Var::q, 0);
      TSeries high = qbinomial(n, c);

      TSeries rhs1(Var::q, deg);  // q^c [n over c] + [n over c-1]
      for (int d = 0; d <= high.order() && d + c <= deg; ++d)
        rhs1.add(d + c, high[d]);
      for (int d = 0; d <= low.order() && d <= deg; ++d) rhs1.add(d, low[d]);

      TSeries rhs2(Var::q, deg);  // [n over c] + q^{n+1-c} [n over c-1]
      for (int d = 0; d <= high.order() && d <= deg; ++d) rhs2.add(d, high[d]);
      for (int d = 0; d <= low.order() && d + n + 1 - c <= deg; ++d)
        rhs2.add(d + n + 1 - c, low[d]);

      if (auto miss = TSeries::first_mismatch(lhs, rhs1)) {
        rep.fail("shift-low recurrence", loc_pair("n", n, "c", c),
                 rational_to_string(rhs1[*miss]), rational_to_string(lhs[*miss]));
        return rep;
      }
      if (auto miss = TSeries::first_mismatch(lhs, rhs2)) {
        rep.fail("shift-high recurrence", loc_pair("n", n, "c", c),
                 rational_to_string(rhs2[*miss]), rational_to_string(lhs[*miss]));
        return rep;
      }
    }
  }
  rep.ok("both recurrences, all (n, c)");
  return rep;
}

namespace {

// Laurent polynomial in x with truncated Q-series coefficients; window
// |j| <= half_width. Rows outside the window only feed Q-degrees beyond
// the comparison range (each x-step costs at least one Q-degree).
struct XLaurent {
  int half_width;
  int dq;
  std::vector<TSeries> rows;

  XLaurent(int w, int dq_)
      : half_width(w), dq(dq_), rows(2 * w + 1, TSeries(Var::q, dq_)) {}

  TSeries& row(int j) { return rows[static_cast<size_t>(j + half_width)]; }
  const TSeries& row(int j) const {
    return rows[static_cast<size_t>(j + half_width)];
  }

  // *this *= (1 - x^{x_step} Q^{q_exp})
  void mul_factor(int x_step, int q_exp) {
    if (q_exp > dq) return;
    XLaurent next = *this;
    for (int j = -half_width; j <= half_width; ++j) {
      int t = j + x_step;
      if (t < -half_width || t > half_width) continue;
      const TSeries& src = row(j);
      TSeries& dst = next.row(t);
      for (int d = 0; d + q_exp <= dq; ++d) dst.add(d + q_exp, -src[d]);
    }
    *this = std::move(next);
  }
};

}  // namespace

Report verify_jacobi_triple(int q_order, int x_range) {
  if (q_order < 1) throw std::invalid_argument("q_order must be >= 1");
  if (x_range < 0) throw std::invalid_argument("x_range must be >= 0");
  Report rep;
  rep.name = "jacobi-triple-product";
  rep.param("q-order", q_order);
  rep.param("x-range", x_range);

  int w = x_range + q_order;
  XLaurent lhs(w, q_order);
  for (int k = -w; k <= w; ++k) {
    long e = static_cast<long>(k) * k;  // q^{k^2/2} -> Q^{k^2}
    if (e > q_order) continue;
    lhs.row(k).add(static_cast<int>(e), (k % 2 == 0) ? 1 : -1);
  }

  XLaurent rhs(w, q_order);
  rhs.row(0).set(0, 1);
  for (int i = 2; i <= q_order; i += 2) rhs.mul_factor(0, i);  // (Q^2; Q^2)_inf
  for (int i = 1; i <= q_order; i += 2) {
    rhs.mul_factor(-1, i);  // (x^{-1} Q; Q^2)_inf
    rhs.mul_factor(1, i);   // (x Q; Q^2)_inf
  }

  for (int j = -x_range; j <= x_range; ++j) {
    if (auto d = TSeries::first_mismatch(lhs.row(j), rhs.row(j))) {
      rep.fail("series equals product", loc_pair("x", j, "Q", *d),
               rational_to_string(rhs.row(j)[*d]),
               rational_to_string(lhs.row(j)[*d]));
      return rep;
    }
  }
  rep.ok("series equals product");
  return rep;
}

namespace {

// The descending multi-sum sum_{n_1 >= ... >= n_{m-1} >= 0}
// q^{sum n_i^2 + n_{a+1} + ... + n_{m-1}} / prod (q)_{n_i - n_{i+1}}.
TSeries ag_multisum(int m, int a, int order) {
  TSeries acc(Var::q, order);
  InversePochhammerCache ipoch(order);
  std::vector<int> n(m - 1);
  std::function<void(int, long)> rec = [&](int i, long e) {
    // i indexes n_{i+1}; n_0 slot unused, n[i] = n_{i+1}
    if (i == m - 1) {
      TSeries term = TSeries::monomial(Var::q, order, static_cast<int>(e));
      for (int j = 0; j < m - 1; ++j) {
        int next = (j + 1 < m - 1) ? n[j + 1] : 0;
        term = term * ipoch.get(n[j] - next);
      }
      acc += term;
      return;
    }
    int cap = (i == 0) ? order : n[i - 1];
    for (int v = 0; v <= cap; ++v) {
      long e2 = e + static_cast<long>(v) * v + (i + 1 > a ? v : 0);
      if (e2 > order) break;
      n[i] = v;
      rec(i + 1, e2);
    }
  };
  rec(0, 0);
  return acc;
}

}  // namespace

Report verify_andrews_gordon(int m, int a, int q_order) {
  check_ma(m, a, 2);
  if (q_order < 0) throw std::invalid_argument("q_order must be >= 0");
  Report rep;
  rep.name = "sum-product-identity";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("q-order", q_order);

  TSeries multisum = ag_multisum(m, a, q_order);

  int p = 2 * m + 1;
  std::vector<int> exps;
  for (int e = 1; e <= q_order; ++e) {
    int r = e % p;
    if (r == 0 || r == a + 1 || r == p - (a + 1)) continue;
    exps.push_back(e);
  }
  TSeries product = product_one_minus(exps, q_order).inverse();
  report_series_check(rep, "multi-sum equals product", multisum, product);

  TSeries chi_form = euler_product(q_order).inverse() *
                     chi_weighted_qseries(m, a, q_order, false);
  report_series_check(rep, "multi-sum equals character sum", multisum,
                      chi_form);
  return rep;
}

namespace {

// sum over ascending chains (k_1..k_{m-1}) of
// q^{sum k_i^2 + k_{a+1}+...+k_{m-1}} / (q)_{k_{m-1}}
// times prod_{i=1, i != a}^{m-2} [k_{i+1} over k_i] and, for 1 <= a <= m-2,
// the slack bracket [k_{a+1}+1 over k_a]. For a = m-1 the slack leaves the
// index range and the sum reduces to the plain chain (no slack, no linear
// exponents): exactly the sum-product multi-sum.
TSeries variant_multisum(int m, int a, int order) {
  TSeries acc(Var::q, order);
  InversePochhammerCache ipoch(order);
  int n = m - 1;
  int slack = (a >= 1 && a <= n - 1) ? a : 0;
  bool reduced = (a == m - 1);
  for_each_chain(n, slack, -1, order, -1, [&](const std::vector<int>& k) {
    long e = 0;
    for (int i = 1; i <= n; ++i) {
      e += static_cast<long>(k[i - 1]) * k[i - 1];
      if (!reduced && i > a) e += k[i - 1];
    }
    if (e > order) return;
    TSeries term = TSeries::monomial(Var::q, order, static_cast<int>(e));
    term = term * ipoch.get(k[n - 1]);
    for (int i = 1; i <= n - 1; ++i) {
      int upper = k[i] + (!reduced && i == a ? 1 : 0);
      term = term * qbinomial_truncated(upper, k[i - 1], order);
    }
    acc += term;
  });
  return acc;
}

}  // namespace

Report verify_variant_ag(int m, int a, int q_order) {
  check_ma(m, a, 2);
  if (q_order < 0) throw std::invalid_argument("q_order must be >= 0");
  Report rep;
  rep.name = "variant-sum-product";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("q-order", q_order);

  TSeries lhs = product_one_minus(triple_product_exponents(m, a, q_order),
                                  q_order) *
                euler_product(q_order).inverse();
  TSeries rhs = variant_multisum(m, a, q_order);
  report_series_check(rep, "product ratio equals bracket multi-sum", lhs, rhs);
  return rep;
}

BiPoly build_H_bipoly(int m, int a, int Dx, int Dq, HForm form) {
  check_ma(m, a);
  if (Dx < 0 || Dq < 0) throw std::invalid_argument("negative truncation");
  int c = 2 * m - 2 * a - 1;

  if (form == HForm::closed) {
    PeriodicCharacter chi = chi_general(m, a);
    long denom = 8L * (2 * m + 1);
    BiPoly out(Dx, Dq);
    for (long n = c;; ++n) {
      long num = n * n - static_cast<long>(c) * c;
      long xexp2 = n - c;
      if (num > denom * Dq && xexp2 > 2L * Dx) break;
      int v = chi(n);
      if (v == 0) continue;
      if (num % denom != 0 || xexp2 % 2 != 0) {
        throw std::runtime_error("non-integral exponent in closed form");
      }
      long qe = num / denom, xe = xexp2 / 2;
      if (qe <= Dq && xe <= Dx)
        out.add(static_cast<int>(xe), static_cast<int>(qe), v);
    }
    return out;
  }

  BiPoly out(Dx, Dq);
  int n = m - 1;
  int slack = (a >= 1 && a <= n - 1) ? a : 0;
  for (int km = 0; km <= Dx; ++km) {
    BiPoly base = poch_x_product(0, km, Dx, Dq);  // (x)_{km+1}
    int top = km + (a == m - 1 ? 1 : 0);
    for_each_chain(n, slack, top, Dq, Dx - km, [&](const std::vector<int>& k) {
      long e = 0, x2 = 0;
      for (int i = 1; i <= n; ++i) {
        e += static_cast<long>(k[i - 1]) * k[i - 1] + (i > a ? k[i - 1] : 0);
        x2 += 2 * k[i - 1];
      }
      if (e > Dq || km + x2 > Dx) return;
      BiPoly term = base.shifted(static_cast<int>(km + x2), static_cast<int>(e));
      out += mul_q(term, bracket_chain(k, km, a, Dq));
    });
  }
  return out;
}

Report verify_H_closed_form(int m, int a, int Dx, int Dq) {
  Report rep;
  rep.name = "two-variable-series-closed-form";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("Dx", Dx);
  rep.param("Dq", Dq);
  BiPoly lhs = build_H_bipoly(m, a, Dx, Dq, HForm::multisum);
  BiPoly rhs = build_H_bipoly(m, a, Dx, Dq, HForm::closed);
  report_bipoly_check(rep, "multi-sum equals closed form", lhs, rhs);
  return rep;
}

Report verify_H_difference_equation(int m, int a, int Dx, int Dq) {
  Report rep;
  rep.name = "difference-equation";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("Dx", Dx);
  rep.param("Dq", Dq);
  BiPoly h = build_H_bipoly(m, a, Dx, Dq, HForm::closed);
  BiPoly rhs = BiPoly::constant(Dx, Dq, 1) -
               BiPoly::monomial(Dx, Dq, 2 * a + 2, a + 1) -
               h.substitute_x_to_qx().shifted(2 * m + 1, 2 * m - a);
  report_bipoly_check(rep, "H(x) = 1 - q^{a+1} x^{2a+2} - q^{2m-a} x^{2m+1} H(qx)",
                      h, rhs);
  return rep;
}

namespace {

// sum (x)_{k_m} x^{k_m + 2 sum k_i} q^{sum k_i^2 - k_1 - ... - k_a}
// prod brackets, truncated to (dx, dq).
BiPoly htilde_raw_sum(int m, int a, int dx, int dq) {
  BiPoly out(dx, dq);
  int n = m - 1;
  int slack = (a >= 1 && a <= n - 1) ? a : 0;
  for (int km = 0; km <= dx; ++km) {
    BiPoly base = poch_x_product(0, km - 1, dx, dq);  // (x)_{km}
    int top = km + (a == m - 1 ? 1 : 0);
    for_each_chain(n, slack, top, dq, dx - km, [&](const std::vector<int>& k) {
      long e = 0, x2 = 0;
      for (int i = 1; i <= n; ++i) {
        e += static_cast<long>(k[i - 1]) * k[i - 1] - (i <= a ? k[i - 1] : 0);
        x2 += 2 * k[i - 1];
      }
      if (e < 0) throw std::runtime_error("negative exponent in shifted sum");
      if (e > dq || km + x2 > dx) return;
      BiPoly term = base.shifted(static_cast<int>(km + x2), static_cast<int>(e));
      out += mul_q(term, bracket_chain(k, km, a, dq));
    });
  }
  return out;
}

}  // namespace

Report verify_Htilde_difference(int m, int a, int Dx, int Dq) {
  check_ma(m, a);
  if (Dx < 0 || Dq < 0) throw std::invalid_argument("negative truncation");
  Report rep;
  rep.name = "shifted-difference-equation";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("Dx", Dx);
  rep.param("Dq", Dq);

  BiPoly raw = htilde_raw_sum(m, a, Dx + 1, Dq);
  raw.add(0, 0, -1);
  for (int d = 0; d <= Dq; ++d) {
    if (raw.coeff(0, d) != 0)
      throw std::runtime_error("sum minus 1 not divisible by x");
  }
  BiPoly ht(Dx, Dq);
  for (int j = 0; j <= Dx; ++j)
    for (int d = 0; d <= Dq; ++d) ht.set(j, d, raw.coeff(j + 1, d));

  BiPoly rhs(Dx, Dq);
  for (int j = 0; j <= 2 * a && j <= Dx; ++j) rhs.add(j, 0, 1);
  rhs -= BiPoly::monomial(Dx, Dq, 2 * m, m - a);
  rhs -= ht.substitute_x_to_qx().shifted(2 * m + 1, m - a + 1);
  report_bipoly_check(
      rep, "Ht(x) = 1+...+x^{2a} - q^{m-a} x^{2m} - q^{m-a+1} x^{2m+1} Ht(qx)",
      ht, rhs);
  return rep;
}

Report verify_H_unity(int m, int a, int q_order) {
  check_ma(m, a);
  Report rep;
  rep.name = "closed-form-at-x-one";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("q-order", q_order);
  TSeries lhs = chi_weighted_qseries(m, a, q_order, false);
  TSeries rhs =
      product_one_minus(triple_product_exponents(m, a, q_order), q_order);
  report_series_check(rep, "x = 1 specialization equals triple product", lhs,
                      rhs);
  return rep;
}

Report verify_H_finite_decomposition(int m, int a, int Dx, int Dq) {
  check_ma(m, a);
  if (Dx < 0 || Dq < 0) throw std::invalid_argument("negative truncation");
  Report rep;
  rep.name = "two-block-decomposition";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("Dx", Dx);
  rep.param("Dq", Dq);

  int n = m - 1;
  bool reduced = (a == m - 1);
  int slack = (!reduced && a >= 1) ? a : 0;

  // block 1: (qx)_inf sum q^E x^{2 sum k + k_{m-1}} / (xq)_{k_{m-1}} brackets.
  // For a = m-1 the slack moves to the top index and the block becomes
  // (qx)_inf (1 + sum over nonzero chains of
  //            q^{sum k^2} x^{2 sum k + k_{m-1} - 1} / (xq)_{k_{m-1}} [..]).
  BiPoly block1(Dx, Dq);
  if (reduced) block1 += poch_x_product(1, Dq, Dx, Dq);
  for_each_chain(n, slack, -1, Dq, Dx, [&](const std::vector<int>& k) {
    long e = 0, x2 = 0;
    for (int i = 1; i <= n; ++i) {
      e += static_cast<long>(k[i - 1]) * k[i - 1];
      if (!reduced && i > a) e += k[i - 1];
      x2 += 2 * k[i - 1];
    }
    int ktop = (n >= 1) ? k[n - 1] : 0;
    long xexp = x2 + ktop;
    if (reduced) {
      if (ktop == 0) return;  // covered by the standalone 1
      xexp -= 1;
    }
    if (e > Dq || xexp > Dx) return;
    // (qx)_inf / (xq)_{k_{m-1}} = prod_{i > k_{m-1}} (1 - q^i x)
    BiPoly tail = poch_x_product(ktop + 1, Dq, Dx, Dq);
    BiPoly term = tail.shifted(static_cast<int>(xexp), static_cast<int>(e));
    TSeries brackets = TSeries::constant(Var::q, Dq, 1);
    for (int i = 1; i <= n - 1; ++i) {
      int upper = k[i] + (!reduced && i == a ? 1 : 0);
      brackets = brackets * qbinomial_truncated(upper, k[i - 1], Dq);
    }
    block1 += mul_q(term, brackets);
  });

  // block 2: (1-x) sum ((qx)_{k_m} - (qx)_inf) x^{k_m} q^E x^{2 sum k} [..]
  BiPoly block2(Dx, Dq);
  BiPoly poch_inf = poch_x_product(1, Dq, Dx, Dq);
  int chain_slack = (a >= 1 && a <= n - 1) ? a : 0;
  for (int km = 0; km <= Dx; ++km) {
    if (km + 1 > Dq) break;  // (qx)_{km} - (qx)_inf starts at q^{km+1}
    BiPoly diff = poch_x_product(1, km, Dx, Dq) - poch_inf;
    int top = km + (a == m - 1 ? 1 : 0);
    for_each_chain(n, chain_slack, top, Dq, Dx - km,
                   [&](const std::vector<int>& k) {
      long e = 0, x2 = 0;
      for (int i = 1; i <= n; ++i) {
        e += static_cast<long>(k[i - 1]) * k[i - 1] + (i > a ? k[i - 1] : 0);
        x2 += 2 * k[i - 1];
      }
      if (e > Dq || km + x2 > Dx) return;
      BiPoly term = diff.shifted(static_cast<int>(km + x2), static_cast<int>(e));
      block2 += mul_q(term, bracket_chain(k, km, a, Dq));
    });
  }
  block2 = block2 - block2.shifted(1, 0);  // times (1 - x)

  BiPoly lhs = block1 + block2;
  BiPoly rhs = build_H_bipoly(m, a, Dx, Dq, HForm::closed);
  report_bipoly_check(rep, "block sum equals closed form", lhs, rhs);
  return rep;
}

Report verify_bridge_identity(int m, int a, int q_order) {
  check_ma(m, a);
  if (q_order < 0) throw std::invalid_argument("q_order must be >= 0");
  Report rep;
  rep.name = "derivative-bridge";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("q-order", q_order);

  int order = q_order;
  int c = 2 * m - 2 * a - 1;
  InversePochhammerCache ipoch(order);
  TSeries eulerP = euler_product(order);

  // block 1: triple product times (c/2 - Lambert)
  TSeries b1 = product_one_minus(triple_product_exponents(m, a, order), order) *
               (TSeries::constant(Var::q, order, Rational(c, 2)) -
                lambert_series(order));

  // block 2: (q)_inf-weighted harmonic multi-sum
  int n = m - 1;
  TSeries inner(Var::q, order);
  if (a <= m - 2) {
    int slack = (a >= 1 && a <= n - 1) ? a : 0;
    for_each_chain(n, slack, -1, order, -1, [&](const std::vector<int>& k) {
      long e = 0, lin = 0;
      for (int i = 1; i <= n; ++i) {
        e += static_cast<long>(k[i - 1]) * k[i - 1] + (i > a ? k[i - 1] : 0);
        lin += 2 * k[i - 1];
      }
      if (e > order) return;
      int ktop = k[n - 1];
      TSeries weight = TSeries::constant(Var::q, order, Rational(lin + ktop)) +
                       lambert_partial(ktop, order);
      TSeries term = TSeries::monomial(Var::q, order, static_cast<int>(e));
      // 1 - q^{k_{a+1}+1}
      int slack_top = (a >= 1) ? k[a] : k[0];
      TSeries slack_factor = TSeries::constant(Var::q, order, 1) -
                             TSeries::monomial(Var::q, order, slack_top + 1);
      term = term * slack_factor * weight;
      for (int i = 1; i <= n; ++i) {
        int prev = (i >= 2) ? k[i - 2] : 0;
        int idx = k[i - 1] - prev + (i == a + 1 ? 1 : 0);
        term = term * ipoch.get(idx);
      }
      inner += term;
    });
  } else {
    // a = m-1: derived form 1 + sum q^{sum k^2}
    // (2 sum k + k_{m-1} - 1 + H_{k_{m-1}}) / prod (q)_{k_i - k_{i-1}}
    inner.add(0, 1);
    for_each_chain(n, 0, -1, order, -1, [&](const std::vector<int>& k) {
      long e = 0, lin = 0;
      for (int i = 1; i <= n; ++i) {
        e += static_cast<long>(k[i - 1]) * k[i - 1];
        lin += 2 * k[i - 1];
      }
      if (e > order) return;
      int ktop = (n >= 1) ? k[n - 1] : 0;
      TSeries weight =
          TSeries::constant(Var::q, order, Rational(lin + ktop - 1)) +
          lambert_partial(ktop, order);
      TSeries term = TSeries::monomial(Var::q, order, static_cast<int>(e));
      term = term * weight;
      for (int i = 1; i <= n; ++i) {
        int prev = (i >= 2) ? k[i - 2] : 0;
        term = term * ipoch.get(k[i - 1] - prev);
      }
      inner += term;
    });
  }
  TSeries b2 = eulerP * inner;

  // block 3: sum over k_1..k_m of ((q)_{k_m} - (q)_inf) q^E brackets
  TSeries b3(Var::q, order);
  int chain_slack = (a >= 1 && a <= n - 1) ? a : 0;
  for (int km = 0; km + 1 <= order; ++km) {
    TSeries diff = pochhammer_q(km, order) - eulerP;
    int top = km + (a == m - 1 ? 1 : 0);
    for_each_chain(n, chain_slack, top, order - km - 1, -1,
                   [&](const std::vector<int>& k) {
      long e = 0;
      for (int i = 1; i <= n; ++i)
        e += static_cast<long>(k[i - 1]) * k[i - 1] + (i > a ? k[i - 1] : 0);
      if (e + km + 1 > order) return;
      TSeries term = diff * bracket_chain(k, km, a, order);
      TSeries shifted(Var::q, order);
      for (int d = 0; d + e <= order; ++d)
        shifted.add(d + static_cast<int>(e), term[d]);
      b3 += shifted;
    });
  }

  TSeries lhs = b1 + b2 - b3;
  TSeries rhs = chi_weighted_qseries(m, a, order, true);
  report_series_check(rep, "derivative blocks equal weighted character sum",
                      lhs, rhs);
  return rep;
}

Report verify_bc_lemma(int a_max, int q_order) {
  if (a_max < 0) throw std::invalid_argument("a_max must be >= 0");
  Report rep;
  rep.name = "alternating-sum-lemma";
  rep.param("a-max", a_max);
  rep.param("q-order", q_order);
  InversePochhammerCache ipoch(q_order);
  for (int A = 0; A <= a_max; ++A) {
    for (int C = 0; C <= A; ++C) {
      TSeries lhs(Var::q, q_order);
      for (int b = C; b <= A; ++b) {
        long e = (static_cast<long>(b) * (b + 1) +
                  static_cast<long>(C) * (C + 1)) /
                 2;
        if (e > q_order) break;
        TSeries term = ipoch.get(A - b);  // copy: get() may grow the cache
        term = term * ipoch.get(b - C);
        TSeries shifted(Var::q, q_order);
        Rational sign = ((b + C) % 2 == 0) ? 1 : -1;
        for (int d = 0; d + e <= q_order; ++d)
          shifted.add(d + static_cast<int>(e), term[d] * sign);
        lhs += shifted;
      }
      long e = static_cast<long>(C) * C + C;
      TSeries rhs(Var::q, q_order);
      if (e <= q_order) {
        TSeries bin = qbinomial(A, C);
        for (int d = 0; d <= bin.order() && d + e <= q_order; ++d)
          rhs.add(d + static_cast<int>(e), bin[d]);
      }
      if (auto miss = TSeries::first_mismatch(lhs, rhs)) {
        rep.fail("alternating sum equals shifted bracket",
                 loc_pair("a", A, "c", C), rational_to_string(rhs[*miss]),
                 rational_to_string(lhs[*miss]));
        return rep;
      }
    }
  }
  rep.ok("all (a, c) pairs");
  return rep;
}

}  // namespace agq
