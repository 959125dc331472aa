#pragma once

#include "agq/apcomplex.hpp"
#include "agq/report.hpp"

#include <vector>

namespace agq {

// Precomputed data at omega = e^{2 pi i / N}: powers, the Pochhammer
// ladder (omega)_0 .. (omega)_{N-1} and its inverses. Built once per
// (N, precision) and shared read-only by the nested sums.
struct OmegaTable {
  int N;
  std::vector<APComplex> power;     // omega^0 .. omega^{N-1}
  std::vector<APComplex> poch;      // (omega)_0 .. (omega)_{N-1}
  std::vector<APComplex> inv_poch;  // inverses of the above

  OmegaTable(int N, int precision_bits);

  const APComplex& omega_pow(long e) const {
    long r = e % N;
    if (r < 0) r += N;
    return power[static_cast<size_t>(r)];
  }

  // [upper over lower] at omega, via the root-of-unity factorization
  // (binomial of the N-quotients times the bracket of the N-remainders);
  // zero when lower < 0 or lower > upper.
  APComplex bracket(long upper, long lower) const;
};

// Finite evaluation of the tail-sum series at q = omega: k_m <= N-1
// because (omega)_{k_m} vanishes beyond, the slack link allows
// k_a <= k_{a+1}+1 (which may reach N), and brackets at N follow the
// root-of-unity collapse. Chain dynamic programming, O(m N^2).
APComplex eval_x_unity(int m, int a, int N, int precision_bits);

// sum_{a,b >= 0, a+b <= N-1} (omega)_{a+b} omega^{-ab}
// (the (5,2)-torus-knot invariant form).
APComplex kashaev_double_sum(int N, int precision_bits);

// (omega)_{N-1} = N; (omega)_a^* (omega)_{N-1-a} = N;
// sum_{b=a}^{N-1} (omega)_b / (omega)_{b-a} = N, for all 0 <= a <= N-1.
Report verify_omega_identities(int N, int precision_bits);

// Index of the smallest-magnitude term of the divergent tail series at N
// (optimal truncation length).
int optimal_tail_terms(int m, int a, int N, int precision_bits);

// |T(n)| / n! (pi/(4(2m+1)N))^n, the magnitude of tail term n.
BigFloat tail_term_magnitude(int m, int a, int N, int n, int precision_bits);

// Two-block large-N approximation: the geometric block
// (2/sqrt(2m+1)) N^{3/2} e^{i pi/4 - i pi c^2/(4(2m+1)N)}
//   sum_k (-1)^k (m-k) sin((a+1)(2k+1)pi/(2m+1)) e^{-i pi N (2k+1)^2/(4(2m+1))}
// plus the tail e^{-i pi c^2/(4(2m+1)N)} sum_{n<tail_terms} T(n)/n!
// (pi/(4(2m+1)Ni))^n. tail_terms < 0 selects optimal truncation.
APComplex asymptotic_rhs(int m, int a, int N, int precision_bits,
                         int tail_terms);

struct ModularMatrix {
  int m = 0;
  int precision_bits = 0;
  std::vector<std::vector<BigFloat>> entries;  // real symmetric, m x m
};

// entries (2/sqrt(2m+1)) cos((2a-1)(2b-1) pi / (2(2m+1))), 1 <= a,b <= m.
ModularMatrix modular_matrix(int m, int precision_bits);

// Symmetry and M^2 = I, residual below m^2 2^{-(precision_bits - 8)}.
Report verify_modular_matrix(int m, int precision_bits);

// sum_{n >= 0} chi(n) e^{2 pi i tau n^2 / (8(2m+1))}, Im tau > 0.
APComplex theta_phi(int m, int a, const APComplex& tau, int precision_bits);

// || Phi(tau) - sqrt(i/tau) M Phi(-1/tau) ||_inf, principal branch;
// components ordered a = m-1 .. 0. Tolerance 2^{-(precision_bits - 76)}.
Report verify_poisson_modularity(int m, const APComplex& tau,
                                 int precision_bits);

// Phi~(1/N) + (-iN)^{3/2} M Phi~(-N) against the truncated tail series,
// componentwise; Phi~(-N)_a = e^{-i pi N c_a^2/(4(2m+1))} times the series
// value at q = 1 (the N = 1 evaluation: the slack link leaves a+1 chains,
// so the value is a+1, not 1). tail_terms < 0 selects
// per-component optimal truncation; residual <= 2 x first omitted term.
Report verify_nearly_modular(int m, int N, int precision_bits, int tail_terms);

}  // namespace agq
