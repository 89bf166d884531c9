#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ocb/laurent.hpp"
#include "ocb/matrix.hpp"
#include "ocb/ratfunc.hpp"
#include "ocb/recipe.hpp"
#include "ocb/relation.hpp"

namespace ocb {

// K = Q(x)[y]/(p) for p monic in y with coefficients in Q[x].
class FunctionField {
 public:
  static std::shared_ptr<const FunctionField> make(const BivariatePoly& p);
  // From y-coefficients a_0, ..., a_{n-1} of y^n + a_{n-1} y^{n-1} + ... + a_0.
  static std::shared_ptr<const FunctionField> make(std::vector<Poly> lower_coeffs);

  int degree() const { return static_cast<int>(a_.size()); }
  // a_j for j < n.
  const std::vector<Poly>& coeffs() const { return a_; }
  // y^k reduced modulo p for k < 2n - 1, as coefficient vectors over Q[x].
  const std::vector<Poly>& reduced_power(int k) const { return powers_[static_cast<size_t>(k)]; }
  // Tr(y^k) for k < 2n - 1.
  const Poly& power_sum(int k) const { return power_sums_[static_cast<size_t>(k)]; }
  // Hash of the canonical form of p; elements of different fields never mix.
  const std::string& fingerprint() const { return fingerprint_; }
  // disc_y(p) = det(Tr(y^{i+j})).
  Poly discriminant() const;

 private:
  explicit FunctionField(std::vector<Poly> a);

  std::vector<Poly> a_;
  std::vector<std::vector<Poly>> powers_;
  std::vector<Poly> power_sums_;
  std::string fingerprint_;
};

using FieldPtr = std::shared_ptr<const FunctionField>;

// sum_j coord_j(x) y^j, stored as polynomial numerators over one monic
// common denominator that shares no factor with all numerators.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, const std::vector<RatFunc>& coords);
  FieldElement(FieldPtr field, std::vector<Poly> nums, Poly den);

  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field) { return constant(std::move(field), RatFunc(1)); }
  static FieldElement constant(FieldPtr field, const RatFunc& c);
  static FieldElement x(FieldPtr field) { return constant(std::move(field), RatFunc::x()); }
  static FieldElement y(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(nums_.size()); }
  RatFunc coord(int j) const;
  std::vector<RatFunc> coords() const;
  const std::vector<Poly>& numerators() const { return nums_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const;
  // Highest j with a nonzero coordinate; -1 for zero.
  int y_degree() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const RatFunc& s);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const RatFunc& s) { return a *= s; }
  friend FieldElement operator*(const RatFunc& s, FieldElement a) { return a *= s; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same_field(const FieldElement& o) const;
  void normalize();

  FieldPtr field_;
  std::vector<Poly> nums_;
  Poly den_ = Poly::constant(Rational(1));
};

FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
// Inverse through the extended gcd of the lifted element with p over Q(x).
FieldElement ff_inv(const FieldElement& a);

// Matrix of multiplication by a: row i holds the coordinates of a * y^i.
Matrix<RatFunc> multiplication_matrix(const FieldElement& a);
RatFunc trace(const FieldElement& a);
// Monic characteristic polynomial of multiplication by a over Q(x).
UPoly<RatFunc> charpoly(const FieldElement& a);
// Integral over Q[x]: every charpoly coefficient is a polynomial.
bool is_integral(const FieldElement& a);
// Integral over R_inf: every charpoly coefficient is regular at x = infinity.
bool is_integral_at_infinity(const FieldElement& a);
Matrix<RatFunc> trace_matrix(const std::vector<FieldElement>& basis);

// n lines "num / den" (or "num" when the denominator is 1), one per y^j.
std::string to_text(const FieldElement& a);
FieldElement parse_field_element(const FieldPtr& field, std::string_view text);

// Readable form such as "(x*y + 3) / (x - 1)".
std::string to_display_string(const FieldElement& a);

// Source of the generator expansions t (for x) and f (for y). Recipe-backed
// sources grow on demand; fixed sources report PrecisionError when exhausted.
class Generators {
 public:
  Generators(Recipe t, Recipe f);
  Generators(LaurentSeries ts, LaurentSeries fs);

  // Both series to at least O(q^trunc).
  std::pair<LaurentSeries, LaurentSeries> at(int trunc) const;
  bool growable() const { return static_cast<bool>(t_recipe_); }
  const Recipe& t_recipe() const { return t_recipe_; }
  const Recipe& f_recipe() const { return f_recipe_; }

 private:
  Recipe t_recipe_, f_recipe_;
  mutable std::mutex mu_;
  mutable LaurentSeries ts_, fs_;
  mutable bool have_ = false;
};

// q-expansion of a under x -> ts, y -> fs, using the given series as is.
LaurentSeries to_qseries(const FieldElement& a, const LaurentSeries& ts, const LaurentSeries& fs);
// q-expansion to O(q^trunc), asking the generators for more precision as needed.
LaurentSeries to_qseries(const FieldElement& a, const Generators& gens, int trunc);

}  // namespace ocb
