#pragma once

#include <vector>

namespace agq {

// Periodic integer-valued function with mean value zero over one period.
// Stored as an explicit period table for O(1) evaluation in hot loops.
class PeriodicCharacter {
 public:
  PeriodicCharacter(int modulus, std::vector<int> values);

  int modulus() const { return modulus_; }
  const std::vector<int>& values() const { return values_; }

  // values[n mod p] with the non-negative (mathematical) residue.
  int operator()(long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    return values_[static_cast<size_t>(r)];
  }

 private:
  int modulus_;
  std::vector<int> values_;
};

// The odd periodic function of modulus 8m+4 attached to (m, a):
// +1 at residues 2m-2a-1 and 6m+2a+5, -1 at 2m+2a+3 and 6m-2a+1.
// (m, a) = (1, 0) is the Dirichlet character of modulus 12.
PeriodicCharacter chi_general(int m, int a);

inline int chi_eval(const PeriodicCharacter& chi, long n) { return chi(n); }

}  // namespace agq
