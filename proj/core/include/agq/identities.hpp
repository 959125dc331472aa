#pragma once

#include "agq/bipoly.hpp"
#include "agq/qseries.hpp"
#include "agq/report.hpp"

namespace agq {

// Both q-binomial recurrences, [n+1 over c] = q^c [n over c] + [n over c-1]
// and [n+1 over c] = [n over c] + q^{n+1-c} [n over c-1], as exact
// polynomial identities for all 0 <= c <= n+1 <= n_max.
Report verify_qbinomial_recurrences(int n_max);

// Triple product: sum_k (-1)^k q^{k^2/2} x^k against
// (q)_inf (x^{-1} q^{1/2})_inf (x q^{1/2})_inf. Half-integer exponents are
// handled by the substitution q = Q^2; coefficients of x^j Q^d are compared
// for |j| <= x_range, d <= q_order.
Report verify_jacobi_triple(int q_order, int x_range);

// The (2m+1)-modulus sum-product identity: the multi-sum
// sum q^{n_1^2+...+n_{m-1}^2 + n_{a+1}+...+n_{m-1}} / prod (q)_{n_i - n_{i+1}}
// against both the modular product and the character-sum form, to q_order.
Report verify_andrews_gordon(int m, int a, int q_order);

// (q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf / (q)_inf as the multi-sum
// with the slack bracket [k_{a+1}+1 over k_a]. For a = m-1 the slack bracket
// leaves the summation range and the identity reduces to the plain
// sum-product multi-sum; that branch is verified in its reduced form.
Report verify_variant_ag(int m, int a, int q_order);

enum class HForm { multisum, closed };

// H_m^(a)(x) = sum (x)_{k_m+1} x^{k_m} prod q^{k_i^2 (+k_i)} x^{2k_i} [..]
// (multisum) or the character sum
// sum_n chi(n) q^{(n^2-c^2)/(8(2m+1))} x^{(n-c)/2}, c = 2m-2a-1 (closed).
// Both are exact through the joint (Dx, Dq) window.
BiPoly build_H_bipoly(int m, int a, int Dx, int Dq, HForm form);

// multisum == closed coefficientwise within truncation.
Report verify_H_closed_form(int m, int a, int Dx, int Dq);

// H(x) = 1 - q^{a+1} x^{2a+2} - q^{2m-a} x^{2m+1} H(qx).
Report verify_H_difference_equation(int m, int a, int Dx, int Dq);

// Htilde(x) = x^{-1} (sum (x)_{k_m} x^{k_m + 2 sum k_i}
// q^{sum k_i^2 - sum_{i<=a} k_i} prod [..] - 1) satisfies
// Htilde(x) = 1 + x + ... + x^{2a} - q^{m-a} x^{2m}
//             - q^{m-a+1} x^{2m+1} Htilde(qx).
// Any non-integral or negative exponent is a hard error.
Report verify_Htilde_difference(int m, int a, int Dx, int Dq);

// Closed form at x = 1 equals (q^{a+1}, q^{2m-a}, q^{2m+1}; q^{2m+1})_inf.
Report verify_H_unity(int m, int a, int q_order);

// Two-block decomposition of H_m^(a)(x):
// (qx)_inf sum q^E x^{2 sum k_i + k_{m-1}} / (xq)_{k_{m-1}} prod [..]
// + (1-x) sum ((qx)_{k_m} - (qx)_inf) x^{k_m} prod q^.. x^.. [..]
// compared against the closed form within the joint window.
Report verify_H_finite_decomposition(int m, int a, int Dx, int Dq);

// The x-derivative of the two-block decomposition at x = 1:
// product * (c/2 - Lambert) + (q)_inf * weighted multi-sum
// - sum ((q)_{k_m} - (q)_inf) q^E prod [..]  ==  sum (n/2) chi(n) q^{...}.
Report verify_bridge_identity(int m, int a, int q_order);

// sum_{b=c}^{a} (-1)^{b+c} q^{(b^2+b+c^2+c)/2} / ((q)_{a-b} (q)_{b-c})
//   = q^{c^2+c} [a over c]  for all 0 <= c <= a <= a_max.
Report verify_bc_lemma(int a_max, int q_order);

}  // namespace agq
