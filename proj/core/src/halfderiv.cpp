#include "agq/halfderiv.hpp"

#include "agq/apcomplex.hpp"
#include "agq/character.hpp"
#include "agq/lvalues.hpp"
#include "agq/qseries.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace agq {

namespace {

void check_args(int m, int a, int D) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (a < 0 || a >= m) throw std::invalid_argument("a out of range 0..m-1");
  if (D < 0) throw std::invalid_argument("order must be >= 0");
}

// Composition homomorphism q -> e^{-t} mod t^{D+1}, with cached powers and
// memoized bracket images.
struct Composer {
  PowerCache cache;
  int D;
  std::map<std::pair<int, int>, TSeries> brackets;

  explicit Composer(int order) : cache(TSeries::exp_neg_t(order)), D(order) {}

  TSeries compose(const TSeries& qpoly) {
    TSeries out(Var::t, D);
    for (int j = 0; j <= qpoly.order(); ++j) {
      if (qpoly[j] == 0) continue;
      out += cache.get(static_cast<unsigned>(j)) * qpoly[j];
    }
    return out;
  }

  const TSeries& bracket(int upper, int lower) {
    auto key = std::make_pair(upper, lower);
    auto it = brackets.find(key);
    if (it == brackets.end()) {
      it = brackets.emplace(key, compose(qbinomial(upper, lower))).first;
    }
    return it->second;
  }
};

}  // namespace

TSeries x_multisum_tseries(int m, int a, int D) {
  check_args(m, a, D);
  Composer comp(D);
  TSeries acc(Var::t, D);
  for (int km = 0; km <= D; ++km) {
    // chain DP over (k_1 .. k_{m-1}); level i carries the exponent
    // q^{k_i^2 (+ k_i for i > a)} and the bracket linking to level i-1
    int bound = km + 1;  // one slack link at most
    TSeries inner(Var::t, D);
    if (m == 1) {
      inner.set(0, 1);
    } else {
      std::vector<TSeries> f;
      for (int w = 0; w <= bound; ++w) {
        long e = static_cast<long>(w) * w + (1 > a ? w : 0);
        f.push_back(comp.compose(
            TSeries::monomial(Var::q, static_cast<int>(e), static_cast<int>(e))));
      }
      for (int i = 1; i <= m - 2; ++i) {
        std::vector<TSeries> g;
        for (int w2 = 0; w2 <= bound; ++w2) {
          int upper = w2 + (i == a ? 1 : 0);
          TSeries s(Var::t, D);
          for (int w = 0; w <= upper && w <= bound; ++w)
            s += f[w] * comp.bracket(upper, w);
          long e = static_cast<long>(w2) * w2 + (i + 1 > a ? w2 : 0);
          g.push_back(s * comp.compose(TSeries::monomial(
                              Var::q, static_cast<int>(e), static_cast<int>(e))));
        }
        f = std::move(g);
      }
      int top = km + (a == m - 1 ? 1 : 0);
      for (int w = 0; w <= top && w <= bound; ++w)
        inner += f[w] * comp.bracket(top, w);
    }
    acc += comp.compose(pochhammer_q(km, km * (km + 1) / 2)) * inner;
  }
  return acc;
}

TSeries x_lvalue_tseries(int m, int a, int D) {
  check_args(m, a, D);
  int c = 2 * m - 2 * a - 1;
  Rational scale = rational(1, 8 * (2 * m + 1));
  Rational pref = Rational(c) * c * scale;

  TSeries expo(Var::t, D);  // e^{pref t}
  Rational term = 1;
  expo.set(0, term);
  for (int n = 1; n <= D; ++n) {
    term *= pref / n;
    term.canonicalize();
    expo.set(n, term);
  }

  TSeries sum(Var::t, D);
  Rational fact = 1, spow = 1;
  for (int n = 0; n <= D; ++n) {
    if (n > 0) {
      fact *= n;
      spow *= scale;
    }
    Rational cn = t_value_bernoulli(m, a, n) * spow / fact;
    cn.canonicalize();
    sum.set(n, cn);
  }
  return expo * sum;
}

XSeriesResult verify_theorem(int m, int a, int D) {
  XSeriesResult res{m, a, D, x_multisum_tseries(m, a, D),
                    x_lvalue_tseries(m, a, D), -1};
  auto miss = TSeries::first_mismatch(res.lhs, res.rhs);
  res.equal_through = miss ? *miss - 1 : D;
  return res;
}

Report half_derivative_numeric_check(int m, int a, const Rational& t0,
                                     int terms, int precision_bits) {
  check_args(m, a, 0);
  if (t0 <= 0) throw std::invalid_argument("t0 must be positive");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;

  Report rep;
  rep.name = "half-derivative-numeric";
  rep.param("m", m);
  rep.param("a", a);
  rep.param("t0", rational_to_string(t0));
  rep.param("terms", terms);
  rep.precision_bits = precision_bits;

  set_working_precision_bits(precision_bits + 64);
  BigFloat t0f = bigfloat_from(t0);
  BigFloat cutoff = pow(BigFloat(2), -precision_bits);
  PeriodicCharacter chi = chi_general(m, a);
  int c = 2 * m - 2 * a - 1;
  BigFloat scale = t0f / (8 * (2 * m + 1));

  BigFloat theta = 0;
  for (long n = 1;; ++n) {
    BigFloat envelope =
        BigFloat(n) * exp(-(BigFloat(n) * n - BigFloat(c) * c) * scale);
    if (n > c && envelope < cutoff) break;
    int v = chi(n);
    if (v != 0) theta += v * envelope;
  }
  theta *= BigFloat(-1) / 2;

  TSeries series = x_lvalue_tseries(m, a, terms);  // one extra coefficient
  BigFloat value = 0, tp = 1;
  for (int n = 0; n < terms; ++n) {
    value += bigfloat_from(series[n]) * tp;
    tp *= t0f;
  }
  BigFloat omitted = abs(bigfloat_from(series[terms])) * tp;
  BigFloat residual = abs(theta - value);

  rep.param("theta-sum", bigfloat_to_dec(theta));
  rep.param("series-value", bigfloat_to_dec(value));
  rep.param("residual", bigfloat_to_dec(residual));
  rep.param("omitted-term", bigfloat_to_dec(omitted));
  if (residual <= 2 * omitted) {
    rep.ok("residual within twice the first omitted term");
  } else {
    rep.fail("residual within twice the first omitted term", "",
             "<= " + bigfloat_to_dec(2 * omitted), bigfloat_to_dec(residual));
  }
  return rep;
}

}  // namespace agq
