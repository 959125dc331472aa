#include "agq/unity.hpp"

#include "agq/character.hpp"
#include "agq/lvalues.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace agq {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::pow;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

void check_ma(int m, int a) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (a < 0 || a >= m) throw std::invalid_argument("a out of range 0..m-1");
}

long binom_long(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::string fmt_loc(const char* key, long v) {
  std::ostringstream out;
  out << key << "=" << v;
  return out.str();
}

// |T(n)| t^n / n! for t = pi / (4(2m+1)N); running state for optimal
// truncation scans and omitted-term bounds.
struct TailMagnitude {
  int m, a;
  BigFloat t;
  BigFloat tn = 1;    // t^n / n!
  int n = 0;

  BigFloat current() const {
    return abs(bigfloat_from(t_value_bernoulli(m, a, n))) * tn;
  }
  void advance() {
    ++n;
    tn *= t / n;
  }
};

}  // namespace

OmegaTable::OmegaTable(int n_root, int precision_bits) : N(n_root) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  set_working_precision_bits(precision_bits + 64);
  BigFloat two_pi_over_n = 2 * bigfloat_pi() / N;
  power.reserve(N);
  poch.reserve(N);
  inv_poch.reserve(N);
  for (int j = 0; j < N; ++j) power.push_back(unit_phase(two_pi_over_n * j));
  APComplex one(1);
  poch.push_back(one);
  inv_poch.push_back(one);
  for (int k = 1; k < N; ++k) {
    poch.push_back(poch.back() * (one - power[static_cast<size_t>(k)]));
    inv_poch.push_back(one / poch.back());
  }
}

APComplex OmegaTable::bracket(long upper, long lower) const {
  if (lower < 0 || lower > upper) return APComplex(0);
  long u0 = upper % N, l0 = lower % N;
  if (l0 > u0) return APComplex(0);
  long b = binom_long(upper / N, lower / N);
  if (b == 0) return APComplex(0);
  APComplex v = poch[static_cast<size_t>(u0)] *
                inv_poch[static_cast<size_t>(l0)] *
                inv_poch[static_cast<size_t>(u0 - l0)];
  return b == 1 ? v : v * BigFloat(b);
}

APComplex eval_x_unity(int m, int a, int N, int precision_bits) {
  check_ma(m, a);
  OmegaTable tab(N, precision_bits);
  if (m == 1) {
    APComplex acc(0);
    for (int k = 0; k < N; ++k) acc += tab.poch[static_cast<size_t>(k)];
    return acc;
  }
  // chain DP: f[w] accumulates levels 1..i at k_i = w; the slack link lets
  // k_a reach k_{a+1}+1, so states run up to w = N and the bracket collapse
  // at upper = N keeps exactly the surviving chains.
  std::vector<APComplex> f(static_cast<size_t>(N) + 1);
  for (int w = 0; w <= N; ++w) {
    long e = static_cast<long>(w) * w + (1 > a ? w : 0);
    f[static_cast<size_t>(w)] = tab.omega_pow(e);
  }
  for (int i = 1; i <= m - 2; ++i) {
    std::vector<APComplex> g(static_cast<size_t>(N) + 1);
    for (int w2 = 0; w2 <= N; ++w2) {
      long upper = w2 + (i == a ? 1 : 0);
      APComplex s(0);
      for (long w = 0; w <= upper && w <= N; ++w)
        s += f[static_cast<size_t>(w)] * tab.bracket(upper, w);
      long e = static_cast<long>(w2) * w2 + (i + 1 > a ? w2 : 0);
      g[static_cast<size_t>(w2)] = s * tab.omega_pow(e);
    }
    f = std::move(g);
  }
  APComplex acc(0);
  for (int km = 0; km < N; ++km) {
    long top = km + (a == m - 1 ? 1 : 0);
    APComplex inner(0);
    for (long w = 0; w <= top && w <= N; ++w)
      inner += f[static_cast<size_t>(w)] * tab.bracket(top, w);
    acc += tab.poch[static_cast<size_t>(km)] * inner;
  }
  return acc;
}

APComplex kashaev_double_sum(int N, int precision_bits) {
  OmegaTable tab(N, precision_bits);
  APComplex acc(0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; i + j < N; ++j)
      acc += tab.poch[static_cast<size_t>(i + j)] *
             tab.omega_pow(-static_cast<long>(i) * j);
  return acc;
}

Report verify_omega_identities(int N, int precision_bits) {
  Report rep;
  rep.name = "omega-identities";
  rep.param("N", N);
  rep.precision_bits = precision_bits;
  OmegaTable tab(N, precision_bits);
  BigFloat tol = N * pow(BigFloat(2), -(precision_bits - 8));
  APComplex target(N);

  BigFloat full = (tab.poch[static_cast<size_t>(N - 1)] - target).abs();
  if (full < tol) {
    rep.ok("full ladder equals N");
  } else {
    rep.fail("full ladder equals N", "", bigfloat_to_dec(BigFloat(N)),
             bigfloat_to_dec(full) + " away");
  }

  BigFloat worst_pair = 0, worst_fold = 0;
  bool pair_ok = true, fold_ok = true;
  for (int a = 0; a < N; ++a) {
    BigFloat d = (tab.poch[static_cast<size_t>(a)].conj() *
                      tab.poch[static_cast<size_t>(N - 1 - a)] -
                  target)
                     .abs();
    if (d > worst_pair) worst_pair = d;
    if (d >= tol && pair_ok) {
      pair_ok = false;
      rep.fail("conjugate-complement product equals N", fmt_loc("a", a),
               bigfloat_to_dec(BigFloat(N)), bigfloat_to_dec(d) + " away");
    }
    APComplex s(0);
    for (int b = a; b < N; ++b)
      s += tab.poch[static_cast<size_t>(b)] *
           tab.inv_poch[static_cast<size_t>(b - a)];
    BigFloat e = (s - target).abs();
    if (e > worst_fold) worst_fold = e;
    if (e >= tol && fold_ok) {
      fold_ok = false;
      rep.fail("shifted ladder-ratio sum equals N", fmt_loc("a", a),
               bigfloat_to_dec(BigFloat(N)), bigfloat_to_dec(e) + " away");
    }
  }
  if (pair_ok) rep.ok("conjugate-complement product equals N");
  if (fold_ok) rep.ok("shifted ladder-ratio sum equals N");
  rep.param("max-pair-residual", bigfloat_to_dec(worst_pair));
  rep.param("max-sum-residual", bigfloat_to_dec(worst_fold));
  return rep;
}

int optimal_tail_terms(int m, int a, int N, int precision_bits) {
  check_ma(m, a);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  set_working_precision_bits(precision_bits + 64);
  TailMagnitude mag{m, a, bigfloat_pi() / (4 * (2 * m + 1) * N)};
  BigFloat prev = -1;
  for (int n = 0; n <= 4 * N; ++n) {
    BigFloat cur = mag.current();
    if (cur != 0) {
      if (prev >= 0 && cur > prev) return n;  // prev index held the minimum
      prev = cur;
    }
    mag.advance();
  }
  throw std::runtime_error("tail magnitudes never turned around");
}

BigFloat tail_term_magnitude(int m, int a, int N, int n, int precision_bits) {
  check_ma(m, a);
  if (N < 1 || n < 0) throw std::invalid_argument("need N >= 1 and n >= 0");
  set_working_precision_bits(precision_bits + 64);
  TailMagnitude mag{m, a, bigfloat_pi() / (4 * (2 * m + 1) * N)};
  while (mag.n < n) mag.advance();
  return mag.current();
}

APComplex asymptotic_rhs(int m, int a, int N, int precision_bits,
                         int tail_terms) {
  check_ma(m, a);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  set_working_precision_bits(precision_bits + 64);
  BigFloat pi = bigfloat_pi();
  int p = 2 * m + 1;
  int c = 2 * m - 2 * a - 1;

  BigFloat geo_scale = 2 / sqrt(BigFloat(p)) * N * sqrt(BigFloat(N));
  APComplex geo(0);
  for (int k = 0; k < m; ++k) {
    BigFloat amp =
        (k % 2 ? -1 : 1) * (m - k) * sin((a + 1) * (2 * k + 1) * pi / p);
    geo += unit_phase(-N * pi * (2 * k + 1) * (2 * k + 1) / (4 * p)) * amp;
  }
  geo = geo * unit_phase(pi / 4 - pi * c * c / (4 * p * N)) * geo_scale;

  int terms =
      tail_terms < 0 ? optimal_tail_terms(m, a, N, precision_bits) : tail_terms;
  APComplex w(BigFloat(0), -pi / (4 * p * N));  // pi / (4(2m+1) N i)
  APComplex wn(1), tail(0);
  BigFloat inv_fact = 1;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) {
      inv_fact /= n;
      wn *= w;
    }
    tail += wn * (bigfloat_from(t_value_bernoulli(m, a, n)) * inv_fact);
  }
  tail = tail * unit_phase(-pi * c * c / (4 * p * N));
  return geo + tail;
}

ModularMatrix modular_matrix(int m, int precision_bits) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  set_working_precision_bits(precision_bits + 64);
  BigFloat pi = bigfloat_pi();
  BigFloat scale = 2 / sqrt(BigFloat(2 * m + 1));
  ModularMatrix mat{m, precision_bits, {}};
  mat.entries.assign(static_cast<size_t>(m),
                     std::vector<BigFloat>(static_cast<size_t>(m)));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      mat.entries[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] =
          scale * cos((2 * a - 1) * (2 * b - 1) * pi / (2 * (2 * m + 1)));
  return mat;
}

Report verify_modular_matrix(int m, int precision_bits) {
  Report rep;
  rep.name = "modular-matrix";
  rep.param("m", m);
  rep.precision_bits = precision_bits;
  ModularMatrix mat = modular_matrix(m, precision_bits);
  BigFloat tol = m * m * pow(BigFloat(2), -(precision_bits - 8));

  bool sym_ok = true, inv_ok = true;
  BigFloat worst = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      BigFloat d = abs(mat.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                       mat.entries[static_cast<size_t>(j)][static_cast<size_t>(i)]);
      if (d >= tol && sym_ok) {
        sym_ok = false;
        rep.fail("matrix is symmetric", fmt_loc("row", i + 1), "0",
                 bigfloat_to_dec(d));
      }
      BigFloat s = 0;
      for (int k = 0; k < m; ++k)
        s += mat.entries[static_cast<size_t>(i)][static_cast<size_t>(k)] *
             mat.entries[static_cast<size_t>(k)][static_cast<size_t>(j)];
      BigFloat e = abs(s - (i == j ? 1 : 0));
      if (e > worst) worst = e;
      if (e >= tol && inv_ok) {
        inv_ok = false;
        rep.fail("matrix squares to identity", fmt_loc("row", i + 1),
                 i == j ? "1" : "0", bigfloat_to_dec(s));
      }
    }
  if (sym_ok) rep.ok("matrix is symmetric");
  if (inv_ok) rep.ok("matrix squares to identity");
  rep.param("max-square-residual", bigfloat_to_dec(worst));
  return rep;
}

APComplex theta_phi(int m, int a, const APComplex& tau, int precision_bits) {
  check_ma(m, a);
  if (!(tau.im > 0)) throw std::invalid_argument("tau must satisfy Im > 0");
  set_working_precision_bits(precision_bits + 64);
  PeriodicCharacter chi = chi_general(m, a);
  int c = 2 * m - 2 * a - 1;
  BigFloat pi = bigfloat_pi();
  // exponent of the n-th term: 2 pi i tau n^2 / (8(2m+1))
  APComplex base = APComplex(-tau.im, tau.re) * (2 * pi / (8 * (2 * m + 1)));
  BigFloat decay = 2 * pi * tau.im / (8 * (2 * m + 1));
  BigFloat cutoff = pow(BigFloat(2), -(precision_bits + 10));
  using boost::multiprecision::exp;
  APComplex acc(0);
  for (long n = 1;; ++n) {
    BigFloat nn = BigFloat(n) * n;
    if (n > c && exp(-decay * nn) < cutoff) break;
    int v = chi(n);
    if (v == 0) continue;
    APComplex term = complex_exp(base * nn);
    if (v > 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Report verify_poisson_modularity(int m, const APComplex& tau,
                                 int precision_bits) {
  Report rep;
  rep.name = "poisson-modularity";
  rep.param("m", m);
  rep.param("tau", bigfloat_to_dec(tau.re) + " + " + bigfloat_to_dec(tau.im) + "i");
  rep.precision_bits = precision_bits;
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(tau.im > 0)) throw std::invalid_argument("tau must satisfy Im > 0");
  set_working_precision_bits(precision_bits + 64);

  APComplex neg_inv_tau = -(APComplex(1) / tau);
  APComplex factor = complex_sqrt(APComplex(BigFloat(0), BigFloat(1)) / tau);
  ModularMatrix mat = modular_matrix(m, precision_bits);

  // components ordered a = m-1 .. 0 (row p of the matrix pairs with
  // component index p)
  std::vector<APComplex> lhs, mapped;
  for (int p = 0; p < m; ++p) {
    int a = m - 1 - p;
    lhs.push_back(theta_phi(m, a, tau, precision_bits));
    mapped.push_back(theta_phi(m, a, neg_inv_tau, precision_bits));
  }
  BigFloat tol = pow(BigFloat(2), -(precision_bits - 76));
  BigFloat worst = 0;
  bool all_ok = true;
  for (int p = 0; p < m; ++p) {
    APComplex rhs(0);
    for (int q = 0; q < m; ++q)
      rhs += mapped[static_cast<size_t>(q)] *
             mat.entries[static_cast<size_t>(p)][static_cast<size_t>(q)];
    rhs = rhs * factor;
    BigFloat d = (lhs[static_cast<size_t>(p)] - rhs).abs();
    if (d > worst) worst = d;
    if (d >= tol && all_ok) {
      all_ok = false;
      rep.fail("transform matches theta vector", fmt_loc("a", m - 1 - p),
               "< " + bigfloat_to_dec(tol), bigfloat_to_dec(d));
    }
  }
  if (all_ok) rep.ok("transform matches theta vector");
  rep.param("residual", bigfloat_to_dec(worst));
  rep.param("residual-hex", bigfloat_to_hex(worst));
  return rep;
}

Report verify_nearly_modular(int m, int N, int precision_bits,
                             int tail_terms) {
  Report rep;
  rep.name = "nearly-modular";
  rep.param("m", m);
  rep.param("N", N);
  rep.param("tail-terms", tail_terms < 0 ? std::string("optimal")
                                         : std::to_string(tail_terms));
  rep.precision_bits = precision_bits;
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  set_working_precision_bits(precision_bits + 64);
  BigFloat pi = bigfloat_pi();
  int p2 = 2 * m + 1;
  ModularMatrix mat = modular_matrix(m, precision_bits);
  APComplex scale = complex_pow_3_2(APComplex(BigFloat(0), BigFloat(-N)));

  // at alpha = -N the argument is q = 1, the primitive first root of
  // unity: k_m = 0 but the slack link keeps a+1 chains alive, so the
  // series value is the N = 1 evaluation (= a+1), times the phase
  std::vector<APComplex> at_minus_n;
  for (int p = 0; p < m; ++p) {
    int a = m - 1 - p;
    int c = 2 * m - 2 * a - 1;
    at_minus_n.push_back(unit_phase(-pi * N * c * c / (4 * p2)) *
                         eval_x_unity(m, a, 1, precision_bits));
  }

  bool all_ok = true;
  for (int p = 0; p < m; ++p) {
    int a = m - 1 - p;
    int c = 2 * m - 2 * a - 1;
    APComplex lhs =
        eval_x_unity(m, a, N, precision_bits) *
        unit_phase(pi * c * c / (4 * p2 * N));
    APComplex reflected(0);
    for (int q = 0; q < m; ++q)
      reflected += at_minus_n[static_cast<size_t>(q)] *
                   mat.entries[static_cast<size_t>(p)][static_cast<size_t>(q)];
    lhs += scale * reflected;

    int terms = tail_terms < 0 ? optimal_tail_terms(m, a, N, precision_bits)
                               : tail_terms;
    APComplex w(BigFloat(0), -pi / (4 * p2 * N));
    APComplex wn(1), rhs(0);
    BigFloat inv_fact = 1;
    for (int n = 0; n < terms; ++n) {
      if (n > 0) {
        inv_fact /= n;
        wn *= w;
      }
      rhs += wn * (bigfloat_from(t_value_bernoulli(m, a, n)) * inv_fact);
    }
    TailMagnitude mag{m, a, pi / (4 * p2 * N)};
    while (mag.n < terms) mag.advance();
    BigFloat omitted = mag.current();
    BigFloat residual = (lhs - rhs).abs();

    std::string loc = fmt_loc("a", a);
    rep.param("residual[" + loc + "]", bigfloat_to_dec(residual));
    rep.param("omitted[" + loc + "]", bigfloat_to_dec(omitted));
    rep.param("terms[" + loc + "]", terms);
    if (residual <= 2 * omitted) {
      rep.ok("residual within twice the first omitted term", loc);
    } else {
      all_ok = false;
      rep.fail("residual within twice the first omitted term", loc,
               "<= " + bigfloat_to_dec(2 * omitted), bigfloat_to_dec(residual));
    }
  }
  (void)all_ok;
  return rep;
}

}  // namespace agq
