#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agq/character.hpp"

#include <numeric>

using namespace agq;

TEST_CASE("modulus-12 table") {
  PeriodicCharacter chi = chi_general(1, 0);
  CHECK(chi.modulus() == 12);
  int expect[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};
  for (int n = 0; n < 12; ++n) CHECK(chi(n) == expect[n]);
}

TEST_CASE("support residues and signs") {
  for (int m = 1; m <= 5; ++m)
    for (int a = 0; a < m; ++a) {
      PeriodicCharacter chi = chi_general(m, a);
      CHECK(chi.modulus() == 8 * m + 4);
      CHECK(chi(2 * m - 2 * a - 1) == 1);
      CHECK(chi(6 * m + 2 * a + 5) == 1);
      CHECK(chi(2 * m + 2 * a + 3) == -1);
      CHECK(chi(6 * m - 2 * a + 1) == -1);
      int nonzero = 0;
      for (int n = 0; n < chi.modulus(); ++n) nonzero += chi(n) != 0;
      CHECK(nonzero == 4);
    }
}

TEST_CASE("mean zero and anti-periodicity") {
  for (int m = 1; m <= 5; ++m)
    for (int a = 0; a < m; ++a) {
      PeriodicCharacter chi = chi_general(m, a);
      const auto& v = chi.values();
      CHECK(std::accumulate(v.begin(), v.end(), 0) == 0);
      // chi(n + half period) = -chi(n)
      for (int n = 0; n < chi.modulus(); ++n)
        CHECK(chi(n + 4 * m + 2) == -chi(n));
      // even symmetry within the full period: chi(-n) = chi(n)
      for (int n = 1; n < chi.modulus(); ++n) CHECK(chi(-n) == chi(n));
    }
}

TEST_CASE("negative arguments use the mathematical residue") {
  PeriodicCharacter chi = chi_general(2, 1);
  for (long n = -100; n <= 100; ++n)
    CHECK(chi(n) == chi(n + 20 * chi.modulus()));
}
