#include <random>

#include "doctest.h"
#include "ocb/errors.hpp"
#include "ocb/funcfield.hpp"

using namespace ocb;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

FieldPtr sqrt_x_field() { return FunctionField::make(std::vector<Poly>{P({0, -1}), Poly()}); }

FieldPtr example1_field() {
  return FunctionField::make(BivariatePoly({{{0, 5}, 1},
                                            {{1, 4}, 170},
                                            {{2, 3}, 9345},
                                            {{3, 2}, 167320},
                                            {{6, 0}, 3125},
                                            {{5, 0}, -7903458},
                                            {{4, 0}, Integer(3125) * 1771561}}));
}

FieldElement random_element(const FieldPtr& k, std::mt19937& rng, bool with_den) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
  std::vector<RatFunc> c;
  for (int j = 0; j < k->degree(); ++j) {
    std::vector<Rational> v;
    for (int i = 0, d = deg(rng); i <= d; ++i) v.emplace_back(coef(rng));
    Poly den = with_den ? P({coef(rng) == 0 ? 1 : coef(rng), 1}) : P({1});
    c.emplace_back(Poly(v), den);
  }
  return FieldElement(k, c);
}

}  // namespace

TEST_CASE("arithmetic in Q(x)[y]/(y^2 - x)") {
  auto k = sqrt_x_field();
  auto y = FieldElement::y(k), x = FieldElement::x(k), one = FieldElement::one(k);
  CHECK(y * y == x);
  auto yinv = ff_inv(y);
  CHECK(yinv * y == one);
  CHECK(yinv.coord(1) == RatFunc(P({1}), P({0, 1})));
  CHECK(trace(y * y) == RatFunc(P({0, 2})));
  CHECK(trace(y) == RatFunc(0));
  CHECK(k->discriminant() == P({0, 4}));

  auto cp = charpoly(y);
  CHECK(cp == UPoly<RatFunc>({RatFunc(P({0, -1})), RatFunc(0), RatFunc(1)}));
  CHECK(is_integral(y));
  CHECK_FALSE(is_integral(yinv));
  CHECK(is_integral_at_infinity(yinv));
  CHECK_FALSE(is_integral_at_infinity(y));
  CHECK(to_display_string(yinv) == "(y) / (x)");
  CHECK(to_display_string(y + x * x - one) == "y + x^2 - 1");
  CHECK_THROWS_AS(ff_inv(FieldElement::zero(k)), EvaluationError);
}

TEST_CASE("field axioms on random elements") {
  auto k = example1_field();
  std::mt19937 rng(7);
  for (int it = 0; it < 12; ++it) {
    auto a = random_element(k, rng, it % 2 == 0);
    auto b = random_element(k, rng, true);
    auto c = random_element(k, rng, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * ff_inv(a) == FieldElement::one(k));
    CHECK(parse_field_element(k, to_text(b)) == b);
  }
}

TEST_CASE("inverse round trips") {
  auto k = example1_field();
  std::mt19937 rng(19);
  const auto one = FieldElement::one(k);
  CHECK(ff_inv(one) == one);
  CHECK(ff_inv(FieldElement::y(k)) * FieldElement::y(k) == one);
  int checked = 0;
  for (int it = 0; it < 100; ++it) {
    auto a = random_element(k, rng, it % 3 != 0);
    if (a.is_zero()) continue;
    CHECK(a * ff_inv(a) == one);
    ++checked;
  }
  CHECK(checked > 90);

  Generators gens(load_recipe(std::string(OCB_DATA_DIR) + "/n11/t.recipe"), load_recipe(std::string(OCB_DATA_DIR) + "/n11/f1.recipe"));
  auto e = FieldElement::y(k) + FieldElement::x(k) * RatFunc(47);
  auto [ts, fs] = gens.at(80);
  auto direct = series_inv(fs + ts * Rational(47));
  CHECK(agreement(to_qseries(ff_inv(e), gens, 40), direct) >= 40);
}

TEST_CASE("characteristic polynomial annihilates its element") {
  auto k = example1_field();
  std::mt19937 rng(11);
  for (int it = 0; it < 4; ++it) {
    auto a = random_element(k, rng, it % 2 == 1);
    auto cp = charpoly(a);
    REQUIRE(cp.degree() == 5);
    CHECK(cp.lc() == RatFunc(1));
    auto acc = FieldElement::zero(k);
    for (int i = cp.degree(); i >= 0; --i) acc = acc * a + FieldElement::constant(k, cp.coeff(i));
    CHECK(acc.is_zero());
    CHECK(-cp.coeff(4) == trace(a));
  }
}

TEST_CASE("field elements must share a field") {
  auto k1 = sqrt_x_field();
  auto k2 = FunctionField::make(std::vector<Poly>{P({0, -2}), Poly()});
  CHECK_THROWS_AS(FieldElement::y(k1) + FieldElement::y(k2), InternalContractViolation);
  CHECK(FieldElement::y(k1) == FieldElement::y(sqrt_x_field()));
}

TEST_CASE("q-expansions of field elements") {
  auto k = example1_field();
  Generators gens(load_recipe(std::string(OCB_DATA_DIR) + "/n11/t.recipe"), load_recipe(std::string(OCB_DATA_DIR) + "/n11/f1.recipe"));
  auto [ts, fs] = gens.at(40);
  CHECK(to_qseries(FieldElement::y(k), gens, 30) == fs.truncated(30));
  CHECK(to_qseries(FieldElement::x(k), gens, 30) == ts.truncated(30));

  std::mt19937 rng(3);
  auto a = random_element(k, rng, true), b = random_element(k, rng, false);
  auto sa = to_qseries(a, gens, 70), sb = to_qseries(b, gens, 70);
  auto sab = to_qseries(a * b, gens, 10);
  CHECK(agreement(sab, sa * sb) >= 10);
  CHECK(sab.trunc() == 10);

  Generators fixed(ts, fs);
  CHECK_THROWS_AS(to_qseries(a * b, fixed, 40), PrecisionError);
}
