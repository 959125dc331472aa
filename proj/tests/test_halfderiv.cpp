#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agq/halfderiv.hpp"
#include "agq/lvalues.hpp"

using namespace agq;

TEST_CASE("m=1 expansion starts 1 + 23 t/24 + ...") {
  TSeries s = x_lvalue_tseries(1, 0, 4);
  CHECK(s[0] == 1);
  // e^{t/24} (1 + 23 t/24 + ...): coefficient of t is 1/24 + 23/24 = 1
  CHECK(s[1] == 1);
  TSeries multisum = x_multisum_tseries(1, 0, 4);
  CHECK(TSeries::first_mismatch(s, multisum) == std::nullopt);
}

TEST_CASE("routes agree through t^10 for m <= 3") {
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a < m; ++a) {
      CAPTURE(m);
      CAPTURE(a);
      XSeriesResult res = verify_theorem(m, a, 10);
      CHECK(res.passed());
      CHECK(res.equal_through == 10);
    }
}

TEST_CASE("truncation is stable: order D agrees with order D+2") {
  for (auto [m, a] : {std::pair{2, 1}, std::pair{3, 0}}) {
    TSeries lo = x_multisum_tseries(m, a, 8);
    TSeries hi = x_multisum_tseries(m, a, 10).truncated(8);
    CHECK(TSeries::first_mismatch(lo, hi) == std::nullopt);
  }
}

TEST_CASE("numeric evaluation near t = 0") {
  Report rep = half_derivative_numeric_check(1, 0, rational(1, 50), 12, 192);
  CHECK(rep.passed());
  Report rep2 = half_derivative_numeric_check(2, 1, rational(1, 80), 10, 192);
  CHECK(rep2.passed());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(x_multisum_tseries(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(half_derivative_numeric_check(1, 0, rational(0), 5, 128),
                  std::invalid_argument);
}
