#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agq/character.hpp"
#include "agq/lvalues.hpp"

using namespace agq;

TEST_CASE("m=1 integer sequence, both routes") {
  // Taylor coefficients of sh(2x)/ch(3x): 1, 23, 1681, 257543, 67637281
  const long expect[] = {1, 23, 1681, 257543, 67637281};
  for (int n = 0; n < 5; ++n) {
    CHECK(t_value_bernoulli(1, 0, n) == expect[n]);
    CHECK(t_value_genfun(1, 0, n) == expect[n]);
  }
  CHECK(t_value_bernoulli(1, 0, 5) == Rational("27138236663"));
}

TEST_CASE("m=2 frozen values") {
  CHECK(t_value_bernoulli(2, 0, 0) == 1);
  CHECK(t_value_bernoulli(2, 0, 1) == 71);
  CHECK(t_value_bernoulli(2, 1, 0) == 2);
}

TEST_CASE("route equivalence beyond the frozen values") {
  for (int m = 1; m <= 4; ++m)
    for (int a = 0; a < m; ++a)
      for (int n = 0; n <= 8; ++n)
        CHECK(t_value_bernoulli(m, a, n) == t_value_genfun(m, a, n));
}

TEST_CASE("t-values are integers") {
  for (int m = 1; m <= 4; ++m)
    for (int a = 0; a < m; ++a)
      for (int n = 0; n <= 10; ++n)
        CHECK(is_integer(t_value_bernoulli(m, a, n)));
}

TEST_CASE("L-values at negative odd integers, modulus 12") {
  PeriodicCharacter chi = chi_general(1, 0);
  // L(-1) by hand: -12/2 * (13 + 11 + 11 + 13)/144 = -2
  CHECK(l_value_negative(chi, 0) == -2);
  CHECK(l_value_negative(chi, 1) == 46);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(t_value_bernoulli(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(t_value_bernoulli(2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(t_value_bernoulli(2, -1, 0), std::invalid_argument);
}

TEST_CASE("theta sum vs asymptotic series at small t0") {
  PeriodicCharacter chi = chi_general(1, 0);
  Rational t0 = rational(1, 100);
  int terms = mellin_optimal_terms(chi, t0, 256);
  CHECK(terms > 5);
  MellinCheck c = mellin_asymptotic_check(chi, t0, terms, 256);
  CHECK(c.within_bound);
  CHECK(c.terms == terms);

  // the bound also holds a couple of terms past the optimal cut
  CHECK(mellin_asymptotic_check(chi, t0, terms + 2, 256).within_bound);

  CHECK_THROWS_AS(mellin_asymptotic_check(chi, t0, 0, 256),
                  std::invalid_argument);
  CHECK_THROWS_AS(mellin_asymptotic_check(chi, rational(-1, 100), 3, 256),
                  std::invalid_argument);
}
