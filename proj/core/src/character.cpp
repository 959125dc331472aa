#include "agq/character.hpp"

#include <numeric>
#include <stdexcept>

namespace agq {

PeriodicCharacter::PeriodicCharacter(int modulus, std::vector<int> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  if (values_.size() != static_cast<size_t>(modulus)) {
    throw std::invalid_argument("value table does not match modulus");
  }
  long sum = std::accumulate(values_.begin(), values_.end(), 0L);
  if (sum != 0) {
    throw std::invalid_argument("character must have mean value zero");
  }
}

PeriodicCharacter chi_general(int m, int a) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (a < 0 || a > m - 1) throw std::invalid_argument("a out of range 0..m-1");
  int p = 8 * m + 4;
  std::vector<int> values(p, 0);
  values[2 * m - 2 * a - 1] = 1;
  values[6 * m + 2 * a + 5] = 1;
  values[2 * m + 2 * a + 3] = -1;
  values[6 * m - 2 * a + 1] = -1;
  return PeriodicCharacter(p, std::move(values));
}

}  // namespace agq
