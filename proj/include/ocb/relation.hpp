#pragma once

#include <map>
#include <string>
#include <utility>

#include "ocb/laurent.hpp"
#include "ocb/poly.hpp"

namespace ocb {

// p(x, y) = sum c_ij x^i y^j with integer coefficients.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (i, j): exponents of x and y

  BivariatePoly() = default;
  explicit BivariatePoly(std::map<Key, Integer> coeffs);

  const std::map<Key, Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degx() const;
  int degy() const;
  Integer coeff(int i, int j) const;
  // Coefficient of y^j as a polynomial in x.
  Poly y_coeff(int j) const;
  bool is_monic_in_y() const;

  // Canonical text: one "i j coefficient" line per nonzero term, sorted by (i, j).
  std::string to_text() const;
  static BivariatePoly parse(std::string_view text);

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.c_ == b.c_; }

 private:
  std::map<Key, Integer> c_;
};

// Human readable form such as "y^5 + 170*x*y^4 + ...".
std::string to_display_string(const BivariatePoly& p);

// Absolute precision that find_relation asks of both inputs for pole
// orders n (of ts) and m (of fs).
int relation_precision(int n, int m);

// Solve for the unique (up to scale) p with p(ts, fs) = 0 among polynomials of
// degree <= pole_order(fs) in x and <= pole_order(ts) in y. The result has
// content 1 and a positive leading coefficient in its top y-coefficient.
BivariatePoly find_relation(const LaurentSeries& ts, const LaurentSeries& fs);

// p(ts, fs) as a series.
LaurentSeries relation_residual(const BivariatePoly& p, const LaurentSeries& ts, const LaurentSeries& fs);
// Valuation of p(ts, fs); equals its truncation when it vanishes to known precision.
int verify_relation(const BivariatePoly& p, const LaurentSeries& ts, const LaurentSeries& fs);

}  // namespace ocb
