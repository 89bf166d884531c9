#pragma once

#include <string>

#include "ocb/poly.hpp"

namespace ocb {

// Element of Q(x) in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(Rational(1))) {}
  RatFunc(int c) : RatFunc(Poly::constant(Rational(c))) {}  // NOLINT: literal promotion is intended
  RatFunc(long c) : RatFunc(Poly::constant(Rational(c))) {}  // NOLINT
  explicit RatFunc(const Rational& c) : RatFunc(Poly::constant(c)) {}
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(Rational(1))) {}
  RatFunc(Poly num, Poly den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // deg(num) - deg(den); the order of the pole at x = infinity. Undefined for 0.
  int degree() const { return num_.degree() - den_.degree(); }
  // Value at x = infinity when degree() <= 0.
  Rational value_at_infinity() const;
  Rational operator()(const Rational& at) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Normalized{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  // f(1/x).
  RatFunc at_reciprocal() const;

 private:
  struct Normalized {};
  RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& a) { return a.is_zero(); }

// "num / den" with both sides in canonical polynomial form; "num" alone when
// the denominator is 1.
std::string to_string(const RatFunc& f, std::string_view var = "x");
RatFunc parse_ratfunc(std::string_view text, std::string_view var = "x");

}  // namespace ocb
