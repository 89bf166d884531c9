#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ocb/funcfield.hpp"

namespace ocb {

struct IntegralBasis {
  enum class Kind { global, at_infinity };
  Kind kind = Kind::global;
  std::vector<FieldElement> elems;
  // Squarefree polynomials (in x, or in 1/x at infinity) at which the
  // multiplier-ring test certified maximality.
  std::vector<Poly> certified_at;
};

struct MonicTransform {
  BivariatePoly monic;
  // y_monic = scale(x) * y.
  Poly scale;
};

// y~ = lc_y(p) * y turns p into a polynomial monic in y~.
MonicTransform make_monic(const BivariatePoly& p);

// Yun's algorithm; factors are monic, multiplicities increasing.
std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& d);

// disc_y(p) of a polynomial monic in y.
Poly discriminant(const BivariatePoly& p);

// Basis of the integral closure of Q[x] in K, lower triangular in y.
IntegralBasis integral_basis(const FieldPtr& k);
// Same iteration started from an order with the given basis, which must be
// integral over Q[x].
IntegralBasis enlarge_to_maximal(const FieldPtr& k, const std::vector<FieldElement>& start);
// Basis of the integral closure of R_inf = Q[1/x]_(1/x) in K, as elements of K.
IntegralBasis infinity_basis(const FieldPtr& k);

// The relation must be monic in y; use make_monic first otherwise.
IntegralBasis integral_basis(const BivariatePoly& p);
IntegralBasis infinity_basis(const BivariatePoly& p);

// Kind tag line followed by the elements, separated by blank lines.
std::string to_text(const IntegralBasis& b);
IntegralBasis parse_integral_basis(const FieldPtr& k, std::string_view text);

// Lower triangular Hermite form over Q[x] of the module spanned by the rows
// (power-basis numerators over a common denominator). Row i of the result has
// its last nonzero entry in column i, which is monic; entries left of a
// diagonal have smaller degree than that diagonal.
std::vector<std::vector<Poly>> hermite_lower(std::vector<std::vector<Poly>> rows, size_t n);

}  // namespace ocb
