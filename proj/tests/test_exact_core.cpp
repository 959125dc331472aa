#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agq/bernoulli.hpp"
#include "agq/bipoly.hpp"
#include "agq/rational.hpp"
#include "agq/tseries.hpp"

using namespace agq;

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_from_string("3/4") == rational(3, 4));
  CHECK(rational_from_string("-7") == rational(-7));
  CHECK(rational_from_string("6/8") == rational(3, 4));
  CHECK(rational_to_string(rational(-3, 4)) == "-3/4");
  CHECK(rational_to_string(rational(5)) == "5");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("factorial, binomial, powers") {
  CHECK(factorial(6) == 720);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 0) == 1);
  CHECK(rational_pow(rational(2, 3), -2) == rational(9, 4));
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == rational(-1, 2));
  CHECK(bernoulli_number(2) == rational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(10) == rational(5, 66));
  CHECK(bernoulli_number(12) == rational(-691, 2730));
}

TEST_CASE("Bernoulli polynomials") {
  // B_n(0) = B_n, B_n(1) = B_n for n != 1, B_n(1/2) = (2^{1-n}-1) B_n
  for (unsigned n : {0u, 2u, 4u, 6u, 9u}) {
    CHECK(bernoulli_polynomial(n, 0) == bernoulli_number(n));
    if (n != 1) CHECK(bernoulli_polynomial(n, 1) == bernoulli_number(n));
    Rational half = (rational_pow(rational(2), 1 - static_cast<long>(n)) - 1) *
                    bernoulli_number(n);
    half.canonicalize();
    CHECK(bernoulli_polynomial(n, rational(1, 2)) == half);
  }
  CHECK(bernoulli_polynomial(2, rational(1, 12)) == rational(13, 144));
}

TEST_CASE("truncated series arithmetic") {
  TSeries a = TSeries::monomial(Var::q, 10, 1);  // q
  TSeries one = TSeries::constant(Var::q, 10, 1);
  TSeries geo = (one - a).inverse();
  for (int d = 0; d <= 10; ++d) CHECK(geo[d] == 1);

  TSeries sq = geo * geo;  // coefficients d+1
  for (int d = 0; d <= 10; ++d) CHECK(sq[d] == d + 1);

  CHECK(geo.pow(2).order() == 10);
  CHECK(TSeries::first_mismatch(sq, geo.pow(2)) == std::nullopt);

  // products carry the minimum order of the operands
  TSeries b = TSeries::constant(Var::q, 4, 1);
  CHECK((geo * b).order() == 4);
}

TEST_CASE("e^{-t} series") {
  TSeries e = TSeries::exp_neg_t(8);
  CHECK(e[0] == 1);
  CHECK(e[1] == -1);
  CHECK(e[2] == rational(1, 2));
  CHECK(e[7] == rational(-1, 5040));
  // multiplicative: e^{-t} e^{-t} has coefficients (-2)^k / k!
  TSeries e2 = e * e;
  Rational c = 1;
  for (int k = 0; k <= 8; ++k) {
    CHECK(e2[k] == c);
    c *= rational(-2) / (k + 1);
    c.canonicalize();
  }
}

TEST_CASE("power cache") {
  PowerCache cache(TSeries::monomial(Var::q, 12, 2));
  CHECK(cache.get(0)[0] == 1);
  CHECK(cache.get(3)[6] == 1);
  CHECK(cache.get(3)[5] == 0);
  CHECK(cache.get(7).is_zero());  // q^14 beyond order 12
}

TEST_CASE("bivariate window operations") {
  BiPoly p = BiPoly::monomial(6, 6, 2, 1, rational(3));  // 3 x^2 q
  CHECK(p.coeff(2, 1) == 3);
  CHECK(p.shifted(1, 2).coeff(3, 3) == 3);
  CHECK(p.shifted(5, 0).coeff(2, 1) == 0);  // pushed outside, silently
  CHECK(p.substitute_x_to_qx().coeff(2, 3) == 3);

  BiPoly s = p + BiPoly::monomial(6, 6, 1, 0, rational(5));
  CHECK(s.at_x_one()[0] == 5);
  CHECK(s.at_x_one()[1] == 3);
  // d/dx at 1: x^j picks up factor j
  CHECK(s.d_dx_at_x_one()[0] == 5);
  CHECK(s.d_dx_at_x_one()[1] == 6);

  auto miss = BiPoly::first_mismatch(p, s);
  REQUIRE(miss.has_value());
  CHECK(*miss == std::make_pair(1, 0));
}
