#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agq/unity.hpp"

using namespace agq;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {
BigFloat eps(int bits) { return pow(BigFloat(2), -bits); }
}  // namespace

TEST_CASE("nested sum at small roots of unity") {
  set_working_precision_bits(192);
  CHECK(eval_x_unity(1, 0, 1, 128).abs() == 1);
  CHECK((eval_x_unity(1, 0, 2, 128) - APComplex(3)).abs() < eps(120));
  // N = 3: 11/2 - i sqrt(3)/2
  APComplex v = eval_x_unity(1, 0, 3, 128);
  CHECK(abs(v.re - BigFloat(11) / 2) < eps(120));
  CHECK(abs(v.im + sqrt(BigFloat(3)) / 2) < eps(120));
}

TEST_CASE("value at q = 1 counts the slack chains") {
  for (int m = 1; m <= 4; ++m)
    for (int a = 0; a < m; ++a) {
      APComplex v = eval_x_unity(m, a, 1, 128);
      CHECK((v - APComplex(a + 1)).abs() < eps(120));
    }
}

TEST_CASE("ladder brackets at the root of unity") {
  OmegaTable tab(5, 128);
  // [N over c] collapses to the ends
  CHECK(tab.bracket(5, 0).abs2() == 1);
  CHECK(tab.bracket(5, 5).abs2() == 1);
  for (int c = 1; c < 5; ++c) CHECK(tab.bracket(5, c).abs2() == 0);
  CHECK(tab.bracket(3, 4).abs2() == 0);
  // full ladder equals N
  CHECK((tab.poch[4] - APComplex(5)).abs() < eps(120));
}

TEST_CASE("double sum equals the nested sum") {
  CHECK((kashaev_double_sum(2, 128) - APComplex(5)).abs() < eps(120));
  for (int N = 1; N <= 20; ++N) {
    CAPTURE(N);
    APComplex x = eval_x_unity(2, 0, N, 192);
    CHECK((kashaev_double_sum(N, 192) - x).abs() / x.abs() < eps(128));
  }
}

TEST_CASE("omega identities") {
  CHECK(verify_omega_identities(30, 256).passed());
  CHECK(verify_omega_identities(1, 128).passed());
}

TEST_CASE("reflection matrix") {
  for (int m = 1; m <= 4; ++m) CHECK(verify_modular_matrix(m, 256).passed());
  ModularMatrix mat = modular_matrix(1, 128);
  CHECK(abs(mat.entries[0][0] - 1) < eps(120));  // 2/sqrt(3) cos(pi/6)
}

TEST_CASE("theta vector: shift and inversion") {
  set_working_precision_bits(320);
  APComplex tau(BigFloat(1) / 3, BigFloat(1));
  for (int m = 1; m <= 3; ++m) {
    for (int a = 0; a < m; ++a) {
      // period-1 shift multiplies by the exponent phase of the lead term
      int c = 2 * m - 2 * a - 1;
      APComplex lhs = theta_phi(m, a, tau + APComplex(1), 256);
      APComplex rhs = theta_phi(m, a, tau, 256) *
                      unit_phase(bigfloat_pi() * c * c / (4 * (2 * m + 1)));
      CHECK((lhs - rhs).abs() < eps(200));
    }
    CHECK(verify_poisson_modularity(m, tau, 256).passed());
  }
}

TEST_CASE("asymptotic expansion at the primitive root") {
  // geometric block alone carries the leading order
  APComplex x = eval_x_unity(2, 0, 200, 256);
  APComplex geo = asymptotic_rhs(2, 0, 200, 256, 0);
  CHECK((x - geo).abs() / x.abs() < BigFloat(1) / 100);

  // optimal truncation: residual within twice the first omitted term
  for (auto [m, a] : {std::pair{1, 0}, std::pair{2, 1}}) {
    int terms = optimal_tail_terms(m, a, 100, 256);
    CHECK(terms > 10);
    BigFloat residual =
        (eval_x_unity(m, a, 100, 256) - asymptotic_rhs(m, a, 100, 256, -1))
            .abs();
    CHECK(residual <= 2 * tail_term_magnitude(m, a, 100, terms, 256));
  }
}

TEST_CASE("reformulated expansion") {
  CHECK(verify_nearly_modular(1, 60, 256, -1).passed());
  CHECK(verify_nearly_modular(2, 60, 256, -1).passed());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(eval_x_unity(2, 2, 5, 128), std::invalid_argument);
  CHECK_THROWS_AS(eval_x_unity(1, 0, 0, 128), std::invalid_argument);
  CHECK_THROWS_AS(theta_phi(1, 0, APComplex(BigFloat(1), BigFloat(-1)), 128),
                  std::invalid_argument);
}
