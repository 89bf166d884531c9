#pragma once

#include <cassert>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ocb/errors.hpp"
#include "ocb/rational.hpp"

namespace ocb {

namespace detail {
template <class F>
bool coeff_is_zero(const F& a) {
  return is_zero(a);
}
}  // namespace detail

// Dense univariate polynomial over a field F. Index = degree. The zero
// polynomial has no coefficients; otherwise the last coefficient is nonzero.
//
// F must default-construct to zero, construct from int and provide
// is_zero(const F&) through ADL.
template <class F>
class UPoly {
 public:
  using value_type = F;

  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  explicit UPoly(int c) : c_{F(c)} { trim(); }

  static UPoly constant(F c) { return UPoly(std::vector<F>{std::move(c)}); }
  static UPoly monomial(F c, int degree) {
    std::vector<F> v(static_cast<size_t>(degree) + 1);
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const F& lc() const {
    assert(!c_.empty());
    return c_.back();
  }
  // Coefficient of x^i; zero outside the stored range.
  F coeff(int i) const {
    if (i < 0 || i > degree()) return F();
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<F>& coeffs() const { return c_; }
  size_t size() const { return c_.size(); }
  const F& operator[](size_t i) const { return c_[i]; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const F& s) {
    if (detail::coeff_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const F& s) { return a *= s; }
  friend UPoly operator*(const F& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Multiplication by x^k, k >= 0.
  UPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<F> r(static_cast<size_t>(k), F());
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    F inv = F(1) / lc();
    return *this * inv;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  F operator()(const F& at) const {
    F acc = F();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const UPoly<F>& p) {
  return p.is_zero();
}

// Division with remainder over a field: a = q*b + r, deg r < deg b.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw EvaluationError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<F>(), a};
  std::vector<F> rem = a.coeffs();
  const int db = b.degree();
  std::vector<F> quo(static_cast<size_t>(a.degree() - db) + 1);
  const F inv = F(1) / b.lc();
  for (int k = a.degree() - db; k >= 0; --k) {
    F c = rem[static_cast<size_t>(k + db)] * inv;
    if (detail::coeff_is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= c * b[static_cast<size_t>(j)];
    quo[static_cast<size_t>(k)] = std::move(c);
  }
  rem.resize(static_cast<size_t>(db));
  return {UPoly<F>(std::move(quo)), UPoly<F>(std::move(rem))};
}

template <class F>
UPoly<F> operator/(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).first;
}
template <class F>
UPoly<F> operator%(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).second;
}

// Quotient of an exact division; throws if the remainder is nonzero.
template <class F>
UPoly<F> div_exact(const UPoly<F>& a, const UPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalContractViolation("inexact polynomial division");
  return q;
}

template <class F>
struct ExtGcd {
  UPoly<F> g, s, t;
};

// Euclid over a field. g is monic and s*a + t*b == g. Both zero is an error.
template <class F>
ExtGcd<F> ext_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw EvaluationError("ext_gcd of two zero polynomials");
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  F inv = F(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class F>
UPoly<F> generic_gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using Poly = UPoly<Rational>;

// Monic gcd over Q, computed modulo word-size primes. gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

// Integer polynomial with content 1 and positive leading coefficient that is
// a rational multiple of p, together with that multiplier (p = scale * prim).
std::pair<std::vector<Integer>, Rational> primitive_part(const Poly& p);

// x^deg(p) * p(1/x).
Poly reversed(const Poly& p, int degree);

// Canonical text: terms by descending degree, e.g. "3125*x^2 - 7903458*x + 1/2".
std::string to_string(const Poly& p, std::string_view var = "x");
// Inverse of to_string; accepts any term order and repeated degrees.
Poly parse_poly(std::string_view text, std::string_view var = "x");

}  // namespace ocb
