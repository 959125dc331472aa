#include "agq/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace agq {

BiPoly::BiPoly(int x_order, int q_order) : dx_(x_order), dq_(q_order) {
  if (x_order < 0 || q_order < 0) {
    throw std::invalid_argument("negative truncation order");
  }
  c_.resize(static_cast<size_t>(dx_ + 1) * (dq_ + 1));
}

BiPoly BiPoly::constant(int x_order, int q_order, const Rational& value) {
  BiPoly p(x_order, q_order);
  p.set(0, 0, value);
  return p;
}

BiPoly BiPoly::monomial(int x_order, int q_order, int x_exp, int q_exp,
                        const Rational& coeff) {
  if (x_exp < 0 || q_exp < 0) throw std::invalid_argument("negative exponent");
  BiPoly p(x_order, q_order);
  if (x_exp <= x_order && q_exp <= q_order) p.set(x_exp, q_exp, coeff);
  return p;
}

BiPoly BiPoly::operator-() const {
  BiPoly p(dx_, dq_);
  for (size_t i = 0; i < c_.size(); ++i) p.c_[i] = -c_[i];
  return p;
}

BiPoly BiPoly::truncated(int x_order, int q_order) const {
  BiPoly p(x_order, q_order);
  int nx = std::min(x_order, dx_);
  int nq = std::min(q_order, dq_);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= nq; ++j) p.set(i, j, coeff(i, j));
  return p;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
  BiPoly p = truncated(std::min(dx_, rhs.dx_), std::min(dq_, rhs.dq_));
  for (int i = 0; i <= p.dx_; ++i)
    for (int j = 0; j <= p.dq_; ++j) p.add(i, j, rhs.coeff(i, j));
  return p;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
  BiPoly p = truncated(std::min(dx_, rhs.dx_), std::min(dq_, rhs.dq_));
  for (int i = 0; i <= p.dx_; ++i)
    for (int j = 0; j <= p.dq_; ++j) p.add(i, j, -rhs.coeff(i, j));
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  *this = *this + rhs;
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  *this = *this - rhs;
  return *this;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
  int nx = std::min(dx_, rhs.dx_);
  int nq = std::min(dq_, rhs.dq_);
  BiPoly p(nx, nq);
  for (int ia = 0; ia <= std::min(dx_, nx); ++ia) {
    for (int ja = 0; ja <= std::min(dq_, nq); ++ja) {
      const Rational& a = coeff(ia, ja);
      if (a == 0) continue;
      for (int ib = 0; ia + ib <= nx && ib <= rhs.dx_; ++ib) {
        for (int jb = 0; ja + jb <= nq && jb <= rhs.dq_; ++jb) {
          const Rational& b = rhs.coeff(ib, jb);
          if (b == 0) continue;
          p.add(ia + ib, ja + jb, a * b);
        }
      }
    }
  }
  return p;
}

BiPoly BiPoly::operator*(const Rational& scalar) const {
  BiPoly p(dx_, dq_);
  if (scalar == 0) return p;
  for (size_t i = 0; i < c_.size(); ++i) p.c_[i] = c_[i] * scalar;
  return p;
}

BiPoly BiPoly::shifted(int x_shift, int q_shift) const {
  if (x_shift < 0 || q_shift < 0) throw std::invalid_argument("negative shift");
  BiPoly p(dx_, dq_);
  for (int i = 0; i + x_shift <= dx_; ++i)
    for (int j = 0; j + q_shift <= dq_; ++j)
      p.set(i + x_shift, j + q_shift, coeff(i, j));
  return p;
}

BiPoly BiPoly::substitute_x_to_qx() const {
  BiPoly p(dx_, dq_);
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; i + j <= dq_ && j <= dq_; ++j)
      p.set(i, i + j, coeff(i, j));
  return p;
}

TSeries BiPoly::at_x_one() const {
  TSeries s(Var::q, dq_);
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dq_; ++j) s.add(j, coeff(i, j));
  return s;
}

TSeries BiPoly::d_dx_at_x_one() const {
  TSeries s(Var::q, dq_);
  for (int i = 1; i <= dx_; ++i)
    for (int j = 0; j <= dq_; ++j) s.add(j, coeff(i, j) * i);
  return s;
}

std::optional<std::pair<int, int>> BiPoly::first_mismatch(const BiPoly& a,
                                                          const BiPoly& b) {
  int nx = std::min(a.dx_, b.dx_);
  int nq = std::min(a.dq_, b.dq_);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= nq; ++j)
      if (a.coeff(i, j) != b.coeff(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace agq
