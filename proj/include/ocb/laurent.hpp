#pragma once

#include <string>
#include <vector>

#include "ocb/rational.hpp"

namespace ocb {

// Truncated Laurent series in q over Q, known modulo O(q^trunc).
//
// Nonzero series keep a tight valuation: coeffs()[0] is the coefficient of
// q^valuation() and is nonzero. A series that is zero to the known precision
// has no coefficients and valuation() == trunc().
class LaurentSeries {
 public:
  LaurentSeries() = default;

  // Coefficients for q^val, q^(val+1), ...; anything at or beyond trunc is dropped.
  LaurentSeries(int val, std::vector<Rational> coeffs, int trunc);
  static LaurentSeries zero(int trunc) { return LaurentSeries(trunc, {}, trunc); }
  static LaurentSeries monomial(const Rational& c, int exponent, int trunc);
  static LaurentSeries constant(const Rational& c, int trunc) { return monomial(c, 0, trunc); }
  // From integer coefficients of q^0, q^1, ..., known to O(q^trunc).
  static LaurentSeries from_integers(const std::vector<Integer>& c, int trunc);

  int valuation() const { return val_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of q^k; throws PrecisionError for k >= trunc.
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.front(); }
  // -valuation; throws EvaluationError on the zero series.
  int pole_order() const;
  // Number of known coefficients from the valuation on.
  int relative_precision() const { return trunc_ - val_; }

  LaurentSeries truncated(int trunc) const;
  // q^k * this.
  LaurentSeries shifted(int k) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Rational& s);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }
  // Result is known to O(q^min(v1+T2, v2+T1)).
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // Equal coefficients on the common window and equal truncation.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.val_ == b.val_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }

  std::string to_string(int max_terms = 12) const;

 private:
  void normalize();

  int val_ = 0;
  int trunc_ = 0;
  std::vector<Rational> c_;
};

// Multiplicative inverse; trunc = trunc - 2*valuation.
LaurentSeries series_inv(const LaurentSeries& s);
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_pow(const LaurentSeries& s, long e);
// d/dq, mapping q^k to k q^(k-1).
LaurentSeries series_derivative(const LaurentSeries& s);
int pole_order(const LaurentSeries& s);

// Valuation of a - b on their common precision window (= the window end when
// they agree there).
int agreement(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace ocb
