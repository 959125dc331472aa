#pragma once

#include "agq/tseries.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace agq {

// Bivariate truncated polynomial in (x, q) over Rational. Dense,
// row-major by x-exponent: q-convolutions run along contiguous rows.
class BiPoly {
 public:
  BiPoly(int x_order, int q_order);

  static BiPoly constant(int x_order, int q_order, const Rational& value);
  static BiPoly monomial(int x_order, int q_order, int x_exp, int q_exp,
                         const Rational& coeff = 1);

  int x_order() const { return dx_; }
  int q_order() const { return dq_; }

  const Rational& coeff(int x_exp, int q_exp) const {
    return c_[static_cast<size_t>(x_exp) * (dq_ + 1) + q_exp];
  }
  void set(int x_exp, int q_exp, const Rational& value) {
    c_[static_cast<size_t>(x_exp) * (dq_ + 1) + q_exp] = value;
  }
  void add(int x_exp, int q_exp, const Rational& value) {
    c_[static_cast<size_t>(x_exp) * (dq_ + 1) + q_exp] += value;
  }

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& rhs) const;
  BiPoly operator-(const BiPoly& rhs) const;
  BiPoly operator*(const BiPoly& rhs) const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly operator*(const Rational& scalar) const;

  BiPoly truncated(int x_order, int q_order) const;
  // Multiply by x^a q^b (exact shift, silently truncating).
  BiPoly shifted(int x_shift, int q_shift) const;
  // x -> q x: the x^j row picks up q^j.
  BiPoly substitute_x_to_qx() const;

  // Specializations used by the difference-equation and bridge checks.
  TSeries at_x_one() const;
  TSeries d_dx_at_x_one() const;

  static std::optional<std::pair<int, int>> first_mismatch(const BiPoly& a,
                                                           const BiPoly& b);

 private:
  int dx_, dq_;
  std::vector<Rational> c_;
};

}  // namespace agq
