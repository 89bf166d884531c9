#include "ocb/ratfunc.hpp"

namespace ocb {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw EvaluationError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }
  if (!is_one(den_.lc())) {
    Rational inv = 1 / den_.lc();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) {
      normalize();
    } else if (num_.is_zero()) {
      den_ = Poly::constant(Rational(1));
    }
    return *this;
  }
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ += o.num_;
    return *this;
  }
  // Add over the lcm of the denominators to keep degrees small.
  Poly g = gcd(den_, o.den_);
  Poly a = div_exact(den_, g), b = div_exact(o.den_, g);
  num_ = num_ * b + o.num_ * a;
  den_ = a * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying.
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly n1 = div_exact(num_, g1), d2 = div_exact(o.den_, g1);
  Poly n2 = div_exact(o.num_, g2), d1 = div_exact(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!is_one(den_.lc())) {
    Rational inv = 1 / den_.lc();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw EvaluationError("inverse of the zero rational function");
  Poly n = den_, d = num_;
  Rational inv = 1 / d.lc();
  return RatFunc(n * inv, d * inv, Normalized{});
}

RatFunc RatFunc::at_reciprocal() const {
  if (is_zero()) return *this;
  // num(1/x)/den(1/x) = rev(num) x^{dd} / (rev(den) x^{dn})
  Poly n = reversed(num_, num_.degree());
  Poly d = reversed(den_, den_.degree());
  int shift = den_.degree() - num_.degree();
  if (shift > 0)
    n = n.shifted(shift);
  else if (shift < 0)
    d = d.shifted(-shift);
  return RatFunc(std::move(n), std::move(d));
}

Rational RatFunc::value_at_infinity() const {
  if (is_zero() || degree() < 0) return Rational(0);
  if (degree() > 0) throw EvaluationError("rational function has a pole at infinity");
  return num_.lc() / den_.lc();
}

Rational RatFunc::operator()(const Rational& at) const {
  Rational d = den_(at);
  if (ocb::is_zero(d)) throw EvaluationError("rational function evaluated at a pole");
  return num_(at) / d;
}

std::string to_string(const RatFunc& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num() * (1 / f.den().lc()), var);
  return to_string(f.num(), var) + " / " + to_string(f.den(), var);
}

RatFunc parse_ratfunc(std::string_view text, std::string_view var) {
  auto slash = text.find(" / ");
  if (slash == std::string_view::npos) return RatFunc(parse_poly(text, var));
  Poly n = parse_poly(text.substr(0, slash), var);
  Poly d = parse_poly(text.substr(slash + 3), var);
  if (d.is_zero()) throw ParseError("zero denominator", 1, static_cast<int>(slash) + 1);
  return RatFunc(std::move(n), std::move(d));
}

}  // namespace ocb
