#include <algorithm>

#include "common.hpp"
#include "doctest.h"
#include "ocb/basis_rr.hpp"
#include "ocb/errors.hpp"

using namespace ocb;
using testing::P;

namespace {

struct Level11 {
  FieldPtr k;
  IntegralBasis global, inf;
  NormalizedBasis nb;
  Generators gens{load_recipe(testing::data_path("t.recipe")), load_recipe(testing::data_path("f1.recipe"))};

  Level11() {
    k = FunctionField::make(testing::load_relation("relation1.txt"));
    global = integral_basis(k);
    inf = infinity_basis(k);
    nb = normalize_at_infinity(global, inf);
  }
};

const Level11& level11() {
  static const Level11 l;
  return l;
}

LaurentSeries ints(int val, std::vector<long> c, int trunc) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return LaurentSeries(val, std::move(r), trunc);
}

// 12 + (5t/22) (a (t - 11^3)/(f + 47t) - (b t + c f)(t + 11^3)/(f^2 + 89 f t + 1424 t^2))
FieldElement closed_form(const FieldPtr& k, long a, long b, long c) {
  auto x = FieldElement::x(k), y = FieldElement::y(k);
  auto cst = [&](long v) { return FieldElement::constant(k, RatFunc(v)); };
  auto first = cst(a) * (x - cst(1331)) / (y + cst(47) * x);
  auto second = (cst(b) * x + cst(c) * y) * (x + cst(1331)) / (y * y + cst(89) * x * y + cst(1424) * x * x);
  return cst(12) + FieldElement::constant(k, RatFunc(P({0, 5}), P({22}))) * (first - second);
}

}  // namespace

TEST_CASE("B_d sizes") {
  const auto& l = level11();
  CHECK(build_Bd(l.nb, 0).size() == 1);
  CHECK(build_Bd(l.nb, 0)[0] == FieldElement::one(l.k));
  for (int d = 1; d <= 4; ++d) CHECK(build_Bd(l.nb, d).size() == static_cast<size_t>(5 * d));
}

TEST_CASE("level 11 order complete basis") {
  const auto& l = level11();
  auto b = order_complete_basis(l.nb, 1, l.gens, 20);
  std::vector<int> orders;
  for (const auto& e : b.entries) orders.push_back(e.pole_order);
  CHECK(orders == std::vector<int>{0, 2, 3, 4, 5});
  CHECK(b.gaps == std::vector<int>{1});
  CHECK(b.d_used == 1);
  CHECK(b.entries[0].expr == FieldElement::one(l.k));
  CHECK(b.entries[1].series.truncated(3) == ints(-2, {1, 2, 0, 5, 8}, 3));
  CHECK(b.entries[2].series.truncated(3) == ints(-3, {1, 0, 1, 0, 2, 2}, 3));
  CHECK(b.entries[3].series.truncated(3) == ints(-4, {1, 0, 0, -2, 0, 6, 3}, 3));

  // The closed forms for b_2, b_3, b_4 are exactly the echelon entries.
  CHECK(b.entries[1].expr == closed_form(l.k, 1, 42, 1));
  CHECK(b.entries[2].expr == closed_form(l.k, 3, 16, 3));
  CHECK(b.entries[3].expr == closed_form(l.k, -3, 28, 19));

  for (size_t i = 0; i < b.entries.size(); ++i) {
    const auto& e = b.entries[i];
    CHECK(is_integral(e.expr));
    CHECK(minimal_d(e.expr, l.inf) <= 1);
    CHECK(e.series.leading() == 1);
    for (size_t j = 0; j < b.entries.size(); ++j)
      if (j != i) CHECK(b.entries[j].series.coeff(-e.pole_order) == 0);
    // Stored series agree with a fresh expansion at twice the precision.
    CHECK(agreement(to_qseries(e.expr, l.gens, 40), e.series) >= 20);
  }
}

TEST_CASE("B_d counts and gaps for larger d") {
  const auto& l = level11();
  for (int d = 2; d <= 3; ++d) {
    auto b = order_complete_basis(l.nb, d, l.gens, 10);
    CHECK(b.entries.size() == static_cast<size_t>(5 * d));
    CHECK(b.max_order() == 5 * d);
    CHECK(b.gaps == std::vector<int>{1});
  }
}

TEST_CASE("min_d_for_order") {
  const auto& l = level11();
  CHECK(min_d_for_order(l.nb, 0, l.gens, 10) == 0);
  CHECK(min_d_for_order(l.nb, 4, l.gens, 10) == 1);
  CHECK(min_d_for_order(l.nb, 16, l.gens, 10) == 4);
}

TEST_CASE("singleton and dependent inputs") {
  const auto& l = level11();
  auto one = ref_basis({FieldElement::one(l.k)}, l.gens, 5);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].pole_order == 0);
  CHECK(one.entries[0].series == LaurentSeries::constant(1, 5));
  CHECK(one.gaps.empty());
  auto x = FieldElement::x(l.k);
  CHECK_THROWS_AS(ref_basis({x, x * RatFunc(2)}, l.gens, 5), InternalContractViolation);
}

TEST_CASE("order complete basis JSON round trip") {
  const auto& l = level11();
  auto b = order_complete_basis(l.nb, 1, l.gens, 10);
  auto text = to_json(b);
  auto back = parse_order_complete_basis(l.k, text);
  REQUIRE(back.entries.size() == b.entries.size());
  for (size_t i = 0; i < b.entries.size(); ++i) {
    CHECK(back.entries[i].expr == b.entries[i].expr);
    CHECK(back.entries[i].series == b.entries[i].series);
  }
  CHECK(to_json(back) == text);
  CHECK_THROWS_AS(parse_order_complete_basis(l.k, "{"), ParseError);
}
