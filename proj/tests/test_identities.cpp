#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agq/identities.hpp"

using namespace agq;

TEST_CASE("triple product, small window") {
  CHECK(verify_jacobi_triple(20, 10).passed());
}

TEST_CASE("sum-product identities") {
  for (int m = 2; m <= 3; ++m)
    for (int a = 0; a < m; ++a) {
      CAPTURE(m);
      CAPTURE(a);
      CHECK(verify_andrews_gordon(m, a, 40).passed());
      CHECK(verify_variant_ag(m, a, 40).passed());
    }
  // the variant family needs at least two summation indices
  CHECK_THROWS_AS(verify_variant_ag(1, 0, 40), std::invalid_argument);
}

TEST_CASE("two-variable function: closed form and difference equations") {
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a < m; ++a) {
      CAPTURE(m);
      CAPTURE(a);
      CHECK(verify_H_closed_form(m, a, 10, 10).passed());
      CHECK(verify_H_difference_equation(m, a, 10, 10).passed());
      CHECK(verify_Htilde_difference(m, a, 10, 10).passed());
      CHECK(verify_H_unity(m, a, 25).passed());
      CHECK(verify_H_finite_decomposition(m, a, 10, 10).passed());
    }
}

TEST_CASE("closed form is window-stable") {
  // enlarging the window must not change coefficients inside it
  BiPoly small = build_H_bipoly(2, 1, 8, 8, HForm::multisum);
  BiPoly large = build_H_bipoly(2, 1, 12, 12, HForm::multisum);
  CHECK(BiPoly::first_mismatch(small, large.truncated(8, 8)) == std::nullopt);
}

TEST_CASE("bridge identity") {
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a < m; ++a) {
      CAPTURE(m);
      CAPTURE(a);
      CHECK(verify_bridge_identity(m, a, 18).passed());
    }
}

TEST_CASE("double-index collapse") {
  CHECK(verify_bc_lemma(6, 30).passed());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(verify_andrews_gordon(2, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_H_closed_form(0, 0, 5, 5), std::invalid_argument);
}
