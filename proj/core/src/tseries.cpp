#include "agq/tseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace agq {

const char* var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::q: return "q";
    case Var::x: return "x";
  }
  return "?";
}

TSeries::TSeries(Var var, int order) : var_(var) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeff_.resize(order + 1);
}

TSeries TSeries::constant(Var var, int order, const Rational& value) {
  TSeries s(var, order);
  s.coeff_[0] = value;
  return s;
}

TSeries TSeries::monomial(Var var, int order, int exponent,
                          const Rational& coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  TSeries s(var, order);
  if (exponent <= order) s.coeff_[exponent] = coeff;
  return s;
}

TSeries TSeries::exp_neg_t(int order) {
  TSeries s(Var::t, order);
  Rational term = 1;
  s.coeff_[0] = term;
  for (int k = 1; k <= order; ++k) {
    term *= Rational(-1, k);
    term.canonicalize();
    s.coeff_[k] = term;
  }
  return s;
}

bool TSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rational& c) { return c == 0; });
}

TSeries TSeries::truncated(int order) const {
  TSeries s(var_, order);
  int n = std::min(order, this->order());
  for (int d = 0; d <= n; ++d) s.coeff_[d] = coeff_[d];
  return s;
}

TSeries TSeries::operator-() const {
  TSeries s(var_, order());
  for (int d = 0; d <= order(); ++d) s.coeff_[d] = -coeff_[d];
  return s;
}

TSeries TSeries::operator+(const TSeries& rhs) const {
  TSeries s = truncated(std::min(order(), rhs.order()));
  for (int d = 0; d <= s.order(); ++d) s.coeff_[d] += rhs.coeff_[d];
  return s;
}

TSeries TSeries::operator-(const TSeries& rhs) const {
  TSeries s = truncated(std::min(order(), rhs.order()));
  for (int d = 0; d <= s.order(); ++d) s.coeff_[d] -= rhs.coeff_[d];
  return s;
}

TSeries& TSeries::operator+=(const TSeries& rhs) {
  *this = *this + rhs;
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& rhs) {
  *this = *this - rhs;
  return *this;
}

TSeries TSeries::operator*(const TSeries& rhs) const {
  int n = std::min(order(), rhs.order());
  TSeries s(var_, n);
  for (int i = 0; i <= n; ++i) {
    if (coeff_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (rhs.coeff_[j] == 0) continue;
      s.coeff_[i + j] += coeff_[i] * rhs.coeff_[j];
    }
  }
  return s;
}

TSeries TSeries::operator*(const Rational& scalar) const {
  TSeries s(var_, order());
  if (scalar == 0) return s;
  for (int d = 0; d <= order(); ++d) s.coeff_[d] = coeff_[d] * scalar;
  return s;
}

TSeries TSeries::pow(unsigned k) const {
  TSeries acc = constant(var_, order(), 1);
  TSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

TSeries TSeries::inverse() const {
  if (coeff_[0] == 0) throw std::domain_error("series has no inverse");
  int n = order();
  TSeries s(var_, n);
  Rational lead = Rational(1) / coeff_[0];
  s.coeff_[0] = lead;
  for (int d = 1; d <= n; ++d) {
    Rational acc = 0;
    for (int j = 1; j <= d; ++j) acc += coeff_[j] * s.coeff_[d - j];
    s.coeff_[d] = -acc * lead;
  }
  return s;
}

std::optional<int> TSeries::first_mismatch(const TSeries& a, const TSeries& b) {
  int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d) {
    if (a.coeff_[d] != b.coeff_[d]) return d;
  }
  return std::nullopt;
}

std::string TSeries::to_string(int max_terms) const {
  std::ostringstream out;
  int shown = 0;
  for (int d = 0; d <= order() && shown < max_terms; ++d) {
    if (coeff_[d] == 0) continue;
    if (shown > 0) out << " + ";
    out << rational_to_string(coeff_[d]) << "*" << var_name(var_) << "^" << d;
    ++shown;
  }
  if (shown == 0) out << "0";
  out << " (order " << order() << ")";
  return out.str();
}

PowerCache::PowerCache(TSeries base) : base_(std::move(base)) {
  powers_.push_back(TSeries::constant(base_.var(), base_.order(), 1));
}

const TSeries& PowerCache::get(unsigned k) {
  while (powers_.size() <= k) {
    powers_.push_back(powers_.back() * base_);
  }
  return powers_[k];
}

}  // namespace agq
