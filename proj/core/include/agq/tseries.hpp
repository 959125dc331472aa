#pragma once

#include "agq/rational.hpp"

#include <optional>
#include <vector>

namespace agq {

enum class Var { t, q, x };

const char* var_name(Var v);

// Truncated univariate formal power series over Rational. coeff[d] is
// the coefficient of var^d; every arithmetic result carries the minimum
// order of its operands, and truncation is silent.
class TSeries {
 public:
  TSeries(Var var, int order);

  static TSeries constant(Var var, int order, const Rational& value);
  static TSeries monomial(Var var, int order, int exponent,
                          const Rational& coeff = 1);
  // sum_{k<=order} (-t)^k / k!
  static TSeries exp_neg_t(int order);

  Var var() const { return var_; }
  int order() const { return static_cast<int>(coeff_.size()) - 1; }

  const Rational& operator[](int d) const { return coeff_[d]; }
  void set(int d, const Rational& value) { coeff_[d] = value; }
  void add(int d, const Rational& value) { coeff_[d] += value; }

  bool is_zero() const;
  TSeries truncated(int order) const;

  TSeries operator-() const;
  TSeries operator+(const TSeries& rhs) const;
  TSeries operator-(const TSeries& rhs) const;
  TSeries operator*(const TSeries& rhs) const;
  TSeries& operator+=(const TSeries& rhs);
  TSeries& operator-=(const TSeries& rhs);
  TSeries operator*(const Rational& scalar) const;

  // this^k truncated to this->order(); repeated squaring.
  TSeries pow(unsigned k) const;
  // multiplicative inverse; requires a nonzero constant term.
  TSeries inverse() const;

  // Smallest d (through the common order) where the two differ.
  static std::optional<int> first_mismatch(const TSeries& a, const TSeries& b);

  std::string to_string(int max_terms = 8) const;

 private:
  Var var_;
  std::vector<Rational> coeff_;
};

// Incrementally filled table of base^0, base^1, ... sharing one series
// multiplication per new entry. Composition q = e^{-t} runs through this.
class PowerCache {
 public:
  explicit PowerCache(TSeries base);
  const TSeries& get(unsigned k);

 private:
  TSeries base_;
  std::vector<TSeries> powers_;
};

}  // namespace agq
