#include "agq/bailey.hpp"

#include "agq/qseries.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace agq {

namespace {

// (t; q)_n at a rational point, n >= 0.
Rational poch_point(const Rational& t, const Rational& q, int n) {
  Rational acc = 1, tq = t;
  for (int i = 0; i < n; ++i) {
    acc *= Rational(1) - tq;
    tq *= q;
  }
  acc.canonicalize();
  return acc;
}

// q^e for integer e (e may be negative; q != 0).
Rational qpow(const Rational& q, long e) {
  return rational_pow(q, static_cast<int>(e));
}

struct PochTables {
  // (q)_0..(q)_N and (xq)_0..(xq)_{2N}, plus 1/(q)_m = 0 for m < 0.
  std::vector<Rational> q_poch, xq_poch;
  Rational q, x;

  PochTables(const Rational& q_, const Rational& x_, int n_max)
      : q(q_), x(x_) {
    q_poch.resize(2 * n_max + 2);
    xq_poch.resize(2 * n_max + 2);
    for (size_t i = 0; i < q_poch.size(); ++i) {
      q_poch[i] = poch_point(q, q, static_cast<int>(i));
      xq_poch[i] = poch_point(x * q, q, static_cast<int>(i));
    }
  }

  // 1/((q)_a (xq)_b); zero if either index is negative.
  Rational inv_pair(long a, long b) const {
    if (a < 0 || b < 0) return 0;
    return Rational(1) / (q_poch[static_cast<size_t>(a)] *
                          xq_poch[static_cast<size_t>(b)]);
  }

  // 1/((q)_a (q)_b); zero if either index is negative.
  Rational inv_qq(long a, long b) const {
    if (a < 0 || b < 0) return 0;
    return Rational(1) / (q_poch[static_cast<size_t>(a)] *
                          q_poch[static_cast<size_t>(b)]);
  }
};

std::string sample_loc(int sample, const char* var, long n) {
  std::ostringstream o;
  o << "sample " << sample << ", " << var << "=" << n;
  return o.str();
}

}  // namespace

BaileyPair make_bailey_pair(std::vector<Rational> alpha, const Rational& x,
                            const Rational& q) {
  BaileyPair pair;
  pair.n_max = static_cast<int>(alpha.size()) - 1;
  pair.alpha = std::move(alpha);
  pair.x = x;
  pair.q = q;
  PochTables t(q, x, pair.n_max);
  for (int n = 0; n <= pair.n_max; ++n) {
    Rational b = 0;
    for (int r = 0; r <= n; ++r) b += pair.alpha[r] * t.inv_pair(n - r, n + r);
    b.canonicalize();
    pair.beta.push_back(b);
  }
  return pair;
}

bool bailey_pair_holds(const BaileyPair& pair) {
  if (pair.alpha.size() != pair.beta.size() ||
      static_cast<int>(pair.alpha.size()) != pair.n_max + 1) {
    return false;
  }
  PochTables t(pair.q, pair.x, pair.n_max);
  for (int n = 0; n <= pair.n_max; ++n) {
    Rational b = 0;
    for (int r = 0; r <= n; ++r) b += pair.alpha[r] * t.inv_pair(n - r, n + r);
    if (b != pair.beta[n]) return false;
  }
  return true;
}

Report verify_bailey_machinery(int n_max, int samples, long seed) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Report rep;
  rep.name = "pair-transport-machinery";
  rep.param("n-max", n_max);
  rep.param("samples", samples);
  rep.seed = seed;

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(2, 9);
  std::uniform_int_distribution<int> sign01(0, 1);
  auto small_nonzero = [&]() {
    int n;
    do {
      n = num(rng);
    } while (n == 0);
    return rational(n, den(rng) * 6);  // |value| <= 5/12 < 1/2, nonzero
  };
  auto big = [&]() {
    Rational r = rational(2) + rational(std::abs(num(rng)), den(rng));
    return sign01(rng) ? r : -r;
  };
  auto coeff = [&]() { return rational(num(rng), den(rng)); };

  bool transport_ok = true, coro_ok = true, b1_ok = true, b2_ok = true;
  for (int s = 0; s < samples && rep.passed(); ++s) {
    Rational q = small_nonzero();
    Rational x = small_nonzero();
    Rational rho1 = big();
    Rational rho2 = big();

    std::vector<Rational> alpha;
    for (int r = 0; r <= n_max; ++r) alpha.push_back(coeff());
    BaileyPair pair = make_bailey_pair(alpha, x, q);
    PochTables t(q, x, n_max);

    // transport: (alpha', beta') is again a pair at the same (q, x)
    Rational ratio = x * q / (rho1 * rho2);
    std::vector<Rational> alpha2, beta2;
    for (int r = 0; r <= n_max; ++r) {
      Rational v = poch_point(rho1, q, r) * poch_point(rho2, q, r) /
                   (poch_point(x * q / rho1, q, r) *
                    poch_point(x * q / rho2, q, r)) *
                   qpow(ratio, 0) * pair.alpha[r];
      // (xq / rho1 rho2)^r
      Rational rp = 1;
      for (int i = 0; i < r; ++i) rp *= ratio;
      alpha2.push_back(v * rp);
    }
    for (int n = 0; n <= n_max; ++n) {
      Rational b = 0;
      Rational rp = 1;
      for (int j = 0; j <= n; ++j) {
        b += poch_point(rho1, q, j) * poch_point(rho2, q, j) *
             poch_point(ratio, q, n - j) /
             (t.q_poch[static_cast<size_t>(n - j)] *
              poch_point(x * q / rho1, q, n) *
              poch_point(x * q / rho2, q, n)) *
             rp * pair.beta[j];
        rp *= ratio;
      }
      beta2.push_back(b);
    }
    for (int n = 0; n <= n_max && transport_ok; ++n) {
      Rational b = 0;
      for (int r = 0; r <= n; ++r) b += alpha2[r] * t.inv_pair(n - r, n + r);
      if (b != beta2[n]) {
        transport_ok = false;
        rep.fail("transport preserves the pair relation",
                 sample_loc(s, "n", n), rational_to_string(beta2[n]),
                 rational_to_string(b));
      }
    }

    // iterated corollary: sum_k a_k x^k / ((q)_{n-k} (xq)_{n+k})
    //   = sum_j q^{j^2} x^j / (q)_{n-j} sum_k a_k q^{-k^2} / ((q)_{j-k} (xq)_{j+k})
    for (int n = 0; n <= n_max && coro_ok; ++n) {
      Rational lhs = 0;
      for (int k = 0; k <= n; ++k)
        lhs += alpha[k] * qpow(x, k) * t.inv_pair(n - k, n + k);
      Rational rhs = 0;
      for (int j = 0; j <= n; ++j) {
        Rational inner = 0;
        for (int k = 0; k <= j; ++k)
          inner += alpha[k] * qpow(q, -static_cast<long>(k) * k) *
                   t.inv_pair(j - k, j + k);
        rhs += qpow(q, static_cast<long>(j) * j) * qpow(x, j) /
               t.q_poch[static_cast<size_t>(n - j)] * inner;
      }
      if (lhs != rhs) {
        coro_ok = false;
        rep.fail("iterated corollary", sample_loc(s, "n", n),
                 rational_to_string(rhs), rational_to_string(lhs));
      }
    }

    // bilateral symmetrized forms with c_k supported on |k| <= n_max
    std::vector<Rational> c(2 * n_max + 1);  // c[k + n_max]
    for (auto& v : c) v = coeff();
    auto ck = [&](long k) -> Rational {
      if (k < -n_max || k > n_max) return 0;
      return c[static_cast<size_t>(k + n_max)];
    };
    for (int n = 0; n <= n_max && b1_ok; ++n) {
      Rational lhs = 0, rhs = 0;
      for (long k = -n; k <= n; ++k) lhs += ck(k) * t.inv_qq(n - k, n + k);
      for (int j = 0; j <= n; ++j) {
        Rational inner = 0;
        for (long k = -j; k <= j; ++k)
          inner += ck(k) * qpow(q, -k * k) * t.inv_qq(j - k, j + k);
        rhs += qpow(q, static_cast<long>(j) * j) /
               t.q_poch[static_cast<size_t>(n - j)] * inner;
      }
      if (lhs != rhs) {
        b1_ok = false;
        rep.fail("bilateral form (even shift)", sample_loc(s, "n", n),
                 rational_to_string(rhs), rational_to_string(lhs));
      }
    }
    for (int n = 0; n <= n_max && b2_ok; ++n) {
      Rational lhs = 0, rhs = 0;
      for (long k = -n + 1; k <= n; ++k)
        lhs += ck(k) * t.inv_qq(n - k, n + k - 1);
      for (int j = 0; j <= n; ++j) {
        Rational inner = 0;
        for (long k = -j + 1; k <= j; ++k)
          inner += ck(k) * qpow(q, -(k * k - k)) * t.inv_qq(j - k, j + k - 1);
        rhs += qpow(q, static_cast<long>(j) * j - j) /
               t.q_poch[static_cast<size_t>(n - j)] * inner;
      }
      if (lhs != rhs) {
        b2_ok = false;
        rep.fail("bilateral form (odd shift)", sample_loc(s, "n", n),
                 rational_to_string(rhs), rational_to_string(lhs));
      }
    }
  }
  if (transport_ok) rep.ok("transport preserves the pair relation");
  if (coro_ok) rep.ok("iterated corollary");
  if (b1_ok) rep.ok("bilateral form (even shift)");
  if (b2_ok) rep.ok("bilateral form (odd shift)");

  // formal checks; q = Q^2 keeps the half-integer exponents integral
  const int kOrder = 30;
  InversePochhammerCache ipoch(kOrder);  // in the base variable
  auto inv_poch_qq = [&](int idx) {
    // 1/(Q^2; Q^2)_idx as a Q-series of order kOrder
    TSeries base = ipoch.get(idx);
    TSeries out(Var::q, kOrder);
    for (int d = 0; 2 * d <= kOrder; ++d) out.set(2 * d, base[d]);
    return out;
  };

  // (q)_{n+k-1} -> (q)_{n+k} relation for 2c in {1,2,3,4,5}, n <= 6
  bool mid_ok = true;
  for (int twoc = 1; twoc <= 5 && mid_ok; ++twoc) {
    for (int n = 0; n <= 6 && mid_ok; ++n) {
      TSeries lhs(Var::q, kOrder), rhs_sum(Var::q, kOrder);
      for (long k = -n; k <= n; ++k) {
        long e = twoc * k * k - k;  // Q-exponent of q^{c k^2 - k/2}
        Rational sign = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
        if (n - k >= 0 && n + k - 1 >= 0 && e <= kOrder) {
          TSeries t1 = inv_poch_qq(static_cast<int>(n - k));
          t1 = t1 * inv_poch_qq(static_cast<int>(n + k - 1));
          for (int d = 0; d + e <= kOrder; ++d)
            lhs.add(d + static_cast<int>(e), t1[d] * sign);
        }
        if (e <= kOrder) {
          TSeries t2 = inv_poch_qq(static_cast<int>(n - k));
          t2 = t2 * inv_poch_qq(static_cast<int>(n + k));
          for (int d = 0; d + e <= kOrder; ++d)
            rhs_sum.add(d + static_cast<int>(e), t2[d] * sign);
        }
      }
      TSeries factor = TSeries::constant(Var::q, kOrder, 1) -
                       TSeries::monomial(Var::q, kOrder, 2 * n);
      TSeries rhs = factor * rhs_sum;
      if (auto d = TSeries::first_mismatch(lhs, rhs)) {
        mid_ok = false;
        std::ostringstream loc;
        loc << "2c=" << twoc << ", n=" << n << ", Q^" << *d;
        rep.fail("index-shift relation", loc.str(), rational_to_string(rhs[*d]),
                 rational_to_string(lhs[*d]));
      }
    }
  }
  if (mid_ok) rep.ok("index-shift relation");

  // sum_k (-1)^k q^{(k^2-k)/2} / ((q)_{n-k} (q)_{n+k}) = delta_{n,0}
  bool delta_ok = true;
  for (int n = 0; n <= 6 && delta_ok; ++n) {
    TSeries lhs(Var::q, kOrder);
    for (long k = -n; k <= n; ++k) {
      long e = (k * k - k) / 2;
      if (e > kOrder) continue;
      Rational sign = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
      TSeries t1 = ipoch.get(static_cast<int>(n - k));
      t1 = t1 * ipoch.get(static_cast<int>(n + k));
      for (int d = 0; d + e <= kOrder; ++d)
        lhs.add(d + static_cast<int>(e), t1[d] * sign);
    }
    TSeries rhs =
        TSeries::constant(Var::q, kOrder, n == 0 ? Rational(1) : Rational(0));
    if (auto d = TSeries::first_mismatch(lhs, rhs)) {
      delta_ok = false;
      std::ostringstream loc;
      loc << "n=" << n << ", q^" << *d;
      rep.fail("delta collapse", loc.str(), rational_to_string(rhs[*d]),
               rational_to_string(lhs[*d]));
    }
  }
  if (delta_ok) rep.ok("delta collapse");
  return rep;
}

}  // namespace agq
