#include <algorithm>
#include <random>

#include "common.hpp"
#include "doctest.h"
#include "ocb/normalize.hpp"

using namespace ocb;
using testing::P;

namespace {

FieldElement x_pow(const FieldPtr& k, int e) {
  RatFunc r = e >= 0 ? RatFunc(P({1}).shifted(e)) : RatFunc(P({1}), P({1}).shifted(-e));
  return FieldElement::constant(k, r);
}

// d is minimal with x^-d b in O_inf, decided through characteristic polynomials.
void check_exponents(const NormalizedBasis& nb, const IntegralBasis& inf) {
  for (size_t i = 0; i < nb.b.size(); ++i) {
    const auto& k = nb.b[i].field();
    CHECK(is_integral(nb.b[i]));
    CHECK(is_integral_at_infinity(nb.b[i] * x_pow(k, -nb.d[i])));
    CHECK_FALSE(is_integral_at_infinity(nb.b[i] * x_pow(k, 1 - nb.d[i])));
    CHECK(minimal_d(nb.b[i], inf) == nb.d[i]);
  }
  std::vector<int> d;
  auto v = leading_vectors(coord_matrix(nb.b, inf), d);
  CHECK(d == nb.d);
  QMatrix m(v.size(), v.size());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) m(i, j) = v[i][j];
  CHECK(nullspace(m).empty());
}

void check_unimodular(const NormalizedBasis& nb, const IntegralBasis& global) {
  const size_t n = nb.b.size();
  Matrix<RatFunc> t(n, n);
  for (size_t i = 0; i < n; ++i) {
    FieldElement s = FieldElement::zero(nb.b[i].field());
    for (size_t j = 0; j < n; ++j) {
      t(i, j) = RatFunc(nb.transform[i][j]);
      s += global.elems[j] * t(i, j);
    }
    CHECK(s == nb.b[i]);
  }
  RatFunc det = bareiss_det(t, [](const RatFunc& a, const RatFunc& b) { return a / b; });
  CHECK(det.degree() == 0);
  CHECK(!det.is_zero());
}

NormalizedBasis run(const BivariatePoly& p, IntegralBasis& global, IntegralBasis& inf) {
  auto k = FunctionField::make(p);
  global = integral_basis(k);
  inf = infinity_basis(k);
  return normalize_at_infinity(global, inf);
}

}  // namespace

TEST_CASE("minimal_d of simple elements") {
  auto k = FunctionField::make(testing::parabola());
  auto inf = infinity_basis(k);
  CHECK(minimal_d(FieldElement::one(k), inf) == 0);
  CHECK(minimal_d(FieldElement::x(k), inf) == 1);
  CHECK(minimal_d(FieldElement::y(k), inf) == 1);
  CHECK(minimal_d(x_pow(k, -3), inf) == -3);
}

TEST_CASE("normalization of y^2 - x") {
  IntegralBasis g, inf;
  auto nb = run(testing::parabola(), g, inf);
  CHECK(nb.d == std::vector<int>{0, 1});
  CHECK(nb.b == g.elems);
  auto c = coord_matrix(g.elems, inf);
  CHECK(c.den == P({1}));
  CHECK(c.a[1][1] == P({0, 1}));
  check_exponents(nb, inf);
}

TEST_CASE("normalization of the nodal cubic") {
  IntegralBasis g, inf;
  auto nb = run(testing::nodal_cubic(), g, inf);
  check_exponents(nb, inf);
  check_unimodular(nb, g);
}

TEST_CASE("level 11 normalization") {
  IntegralBasis g, inf;
  auto nb = run(testing::load_relation("relation1.txt"), g, inf);
  auto d = nb.d;
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{0, 1, 1, 1, 2});
  check_exponents(nb, inf);
  check_unimodular(nb, g);

  // No cancellation: minimal_d(sum c_j b_j) = max(deg c_j + d_j).
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> coef(-3, 3), deg(-1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    FieldElement s = FieldElement::zero(nb.b[0].field());
    int expect = INT_MIN;
    for (size_t j = 0; j < nb.b.size(); ++j) {
      const int dj = deg(gen);
      if (dj < 0) continue;
      std::vector<Rational> c(static_cast<size_t>(dj) + 1);
      for (auto& e : c) e = coef(gen);
      c.back() = coef(gen) >= 0 ? 1 : -2;
      Poly cj(c);
      s += nb.b[j] * RatFunc(cj);
      expect = std::max(expect, cj.degree() + nb.d[j]);
    }
    if (s.is_zero()) continue;
    CHECK(minimal_d(s, inf) == expect);
  }
}
