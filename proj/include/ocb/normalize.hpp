#pragma once

#include <string>
#include <vector>

#include "ocb/intbasis.hpp"

namespace ocb {

struct NormalizedBasis {
  std::vector<FieldElement> b;
  std::vector<int> d;
  // b = transform * (original global basis), unimodular over Q[x].
  std::vector<std::vector<Poly>> transform;
};

// D * b_i = sum_j a_ij b'_j with D the monic lcm of the coordinate denominators.
struct CoordMatrix {
  std::vector<std::vector<Poly>> a;
  Poly den;
};

CoordMatrix coord_matrix(const std::vector<FieldElement>& b, const IntegralBasis& at_inf);

// Reduce a global integral basis until the leading vectors at infinity are
// independent; d_i is then minimal with b_i in x^{d_i} O_inf.
NormalizedBasis normalize_at_infinity(const IntegralBasis& global, const IntegralBasis& at_inf);

// Smallest d with x^{-d} elem in the R_inf-span of at_inf.
int minimal_d(const FieldElement& elem, const IntegralBasis& at_inf);

// Leading vectors V_i and exponents d_i of a coordinate matrix.
std::vector<std::vector<Rational>> leading_vectors(const CoordMatrix& c, std::vector<int>& d);

std::string to_text(const NormalizedBasis& nb);

}  // namespace ocb
