#include "ocb/laurent.hpp"

#include <algorithm>

#include "ocb/errors.hpp"

namespace ocb {

namespace {

// Common denominator and integer numerators of a coefficient vector.
std::pair<std::vector<Integer>, Integer> scaled_integers(const std::vector<Rational>& c, size_t n) {
  Integer l = 1;
  for (size_t i = 0; i < n; ++i)
    if (c[i].get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
  std::vector<Integer> z(n);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(c[i]) == 0) continue;
    if (l == 1) {
      z[i] = c[i].get_num();
    } else {
      z[i] = l / c[i].get_den();
      z[i] *= c[i].get_num();
    }
  }
  return {std::move(z), std::move(l)};
}

}  // namespace

LaurentSeries::LaurentSeries(int val, std::vector<Rational> coeffs, int trunc) : val_(val), trunc_(trunc), c_(std::move(coeffs)) {
  if (trunc_ <= val_)
    c_.clear();
  else if (static_cast<int>(c_.size()) > trunc_ - val_)
    c_.resize(static_cast<size_t>(trunc_ - val_));
  normalize();
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int trunc) {
  if (exponent >= trunc || sgn(c) == 0) return zero(trunc);
  return LaurentSeries(exponent, {c}, trunc);
}

LaurentSeries LaurentSeries::from_integers(const std::vector<Integer>& c, int trunc) {
  std::vector<Rational> q(std::min<size_t>(c.size(), static_cast<size_t>(std::max(trunc, 0))));
  for (size_t i = 0; i < q.size(); ++i) q[i] = Rational(c[i]);
  // Terms not supplied are zero up to trunc.
  q.resize(static_cast<size_t>(std::max(trunc, 0)));
  return LaurentSeries(0, std::move(q), trunc);
}

void LaurentSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = trunc_;
    return;
  }
  if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  val_ += static_cast<int>(lead);
  // Pad so that every exponent below trunc has a stored coefficient.
  c_.resize(static_cast<size_t>(trunc_ - val_));
}

Rational LaurentSeries::coeff(int k) const {
  if (k >= trunc_) throw PrecisionError("coefficient of q^" + std::to_string(k) + " requested from a series known to O(q^" + std::to_string(trunc_) + ")");
  if (k < val_) return Rational(0);
  return c_[static_cast<size_t>(k - val_)];
}

int LaurentSeries::pole_order() const {
  if (is_zero()) throw EvaluationError("pole order of the zero series");
  return -val_;
}

LaurentSeries LaurentSeries::truncated(int trunc) const {
  if (trunc >= trunc_) return *this;
  if (trunc <= val_) return zero(trunc);
  return LaurentSeries(val_, std::vector<Rational>(c_.begin(), c_.begin() + (trunc - val_)), trunc);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  r.trunc_ += k;
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const int t = std::min(trunc_, o.trunc_);
  const int v = std::min(val_, o.val_);
  if (v >= t) return *this = zero(t);
  std::vector<Rational> r(static_cast<size_t>(t - v));
  for (int k = std::max(val_, v); k < std::min(trunc_, t); ++k) r[static_cast<size_t>(k - v)] = c_[static_cast<size_t>(k - val_)];
  for (int k = std::max(o.val_, v); k < std::min(o.trunc_, t); ++k) r[static_cast<size_t>(k - v)] += o.c_[static_cast<size_t>(k - o.val_)];
  val_ = v;
  trunc_ = t;
  c_ = std::move(r);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  if (sgn(s) == 0) return *this = zero(trunc_);
  for (auto& c : c_) c *= s;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int val = a.val_ + b.val_;
  const int trunc = std::min(a.val_ + b.trunc_, b.val_ + a.trunc_);
  const size_t len = static_cast<size_t>(std::max(0, trunc - val));
  if (len == 0 || a.is_zero() || b.is_zero()) return LaurentSeries::zero(trunc);
  auto [za, la] = scaled_integers(a.c_, std::min(len, a.c_.size()));
  auto [zb, lb] = scaled_integers(b.c_, std::min(len, b.c_.size()));
  std::vector<Integer> acc(len);
  for (size_t i = 0; i < za.size(); ++i) {
    if (za[i] == 0) continue;
    const size_t lim = std::min(zb.size(), len - i);
    for (size_t j = 0; j < lim; ++j)
      if (zb[j] != 0) mpz_addmul(acc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
  }
  Integer den = la * lb;
  std::vector<Rational> r(len);
  for (size_t k = 0; k < len; ++k) {
    if (acc[k] == 0) continue;
    if (den == 1) {
      r[k] = Rational(acc[k]);
    } else {
      r[k] = Rational(acc[k], den);
      r[k].canonicalize();
    }
  }
  return LaurentSeries(val, std::move(r), trunc);
}

std::string LaurentSeries::to_string(int max_terms) const {
  std::string out;
  int shown = 0;
  for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (sgn(c_[i]) == 0) continue;
    const int k = val_ + static_cast<int>(i);
    if (!out.empty()) out += sgn(c_[i]) < 0 ? " - " : " + ";
    else if (sgn(c_[i]) < 0) out += "-";
    Rational m = abs(c_[i]);
    if (k == 0) {
      out += ocb::to_string(m);
    } else {
      if (m != 1) out += ocb::to_string(m) + "*";
      out += "q^" + std::to_string(k);
    }
    ++shown;
  }
  if (!out.empty()) out += " + ";
  out += "O(q^" + std::to_string(trunc_) + ")";
  return out;
}

LaurentSeries series_inv(const LaurentSeries& s) {
  if (s.is_zero()) throw EvaluationError("inversion of a series that is zero to O(q^" + std::to_string(s.trunc()) + ")");
  const int v = s.valuation();
  const size_t len = static_cast<size_t>(s.relative_precision());
  const auto& a = s.coeffs();
  std::vector<Rational> b(len);
  const bool integral = std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.get_den() == 1; }) && abs(a[0]) == 1;
  if (integral) {
    // Unit leading coefficient: stay in Z.
    std::vector<Integer> za(len), zb(len);
    for (size_t i = 0; i < len; ++i) za[i] = a[i].get_num();
    const int sign = sgn(za[0]);
    zb[0] = sign;
    Integer acc;
    for (size_t k = 1; k < len; ++k) {
      acc = 0;
      for (size_t i = 1; i <= k; ++i)
        if (za[i] != 0 && zb[k - i] != 0) mpz_addmul(acc.get_mpz_t(), za[i].get_mpz_t(), zb[k - i].get_mpz_t());
      zb[k] = sign > 0 ? Integer(-acc) : acc;
    }
    for (size_t i = 0; i < len; ++i) b[i] = Rational(zb[i]);
  } else {
    const Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (size_t k = 1; k < len; ++k) {
      Rational acc;
      for (size_t i = 1; i <= k; ++i)
        if (sgn(a[i]) != 0) acc += a[i] * b[k - i];
      b[k] = -acc * inv0;
    }
  }
  return LaurentSeries(-v, std::move(b), -v + static_cast<int>(len));
}

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) { return a * series_inv(b); }

LaurentSeries series_pow(const LaurentSeries& s, long e) {
  if (e < 0) return series_pow(series_inv(s), -e);
  if (e == 0) {
    // Precision of s^0 is unbounded; use the relative precision of s.
    return LaurentSeries::constant(Rational(1), std::max(1, s.relative_precision()));
  }
  LaurentSeries base = s, acc;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

LaurentSeries series_derivative(const LaurentSeries& s) {
  if (s.is_zero()) return LaurentSeries::zero(s.trunc() - 1);
  std::vector<Rational> d(s.coeffs().size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = s.coeffs()[i] * (s.valuation() + static_cast<int>(i));
  return LaurentSeries(s.valuation() - 1, std::move(d), s.trunc() - 1);
}

int pole_order(const LaurentSeries& s) { return s.pole_order(); }

int agreement(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).valuation(); }

}  // namespace ocb
