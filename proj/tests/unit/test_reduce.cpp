#include <functional>

#include "common.hpp"
#include "doctest.h"
#include "ocb/errors.hpp"
#include "ocb/reduce.hpp"

using namespace ocb;
using testing::P;

namespace {

struct Setup {
  FieldPtr k;
  Generators gens{load_recipe(testing::data_path("t.recipe")), load_recipe(testing::data_path("f1.recipe"))};
  OrderCompleteBasis basis;
  LaurentSeries ts, hs;

  Setup() {
    k = FunctionField::make(testing::load_relation("relation1.txt"));
    auto nb = normalize_at_infinity(integral_basis(k), infinity_basis(k));
    basis = order_complete_basis(nb, 1, gens, 70);
    ts = gens.at(80).first;
    hs = evaluate_recipe(load_recipe(testing::data_path("h.recipe")), 70);
  }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

int count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  int c = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) c += count_partitions(n - p, p);
  return c;
}

}  // namespace

TEST_CASE("decomposition of h") {
  const auto& s = setup();
  auto dec = express(s.hs, s.basis, s.ts);
  REQUIRE(dec.terms.size() == 4);
  const int orders[] = {4, 3, 2, 0};
  const long coeffs[] = {11, 165, 748, 3553};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(dec.terms[i].pole_order == orders[i]);
    CHECK(dec.terms[i].coeff == P({coeffs[i]}));
  }
  CHECK(dec.exact());
  CHECK(dec.residual_valuation >= 50);

  // The closed form is the identity 11^4 + 55t(5(t-11^3)/(f+47t) - 2(71t+3f)(t+11^3)/(f^2+89ft+1424t^2)).
  auto x = FieldElement::x(s.k), y = FieldElement::y(s.k);
  auto c = [&](long v) { return FieldElement::constant(s.k, RatFunc(v)); };
  auto rhs = c(14641) + c(55) * x *
                            (c(5) * (x - c(1331)) / (y + c(47) * x) -
                             c(2) * (c(71) * x + c(3) * y) * (x + c(1331)) / (y * y + c(89) * x * y + c(1424) * x * x));
  auto cf = closed_form(dec, s.basis, s.k);
  CHECK(cf == rhs);
  CHECK(verify_identity(s.hs, cf, s.gens, 60) >= 60);
  CHECK(verify_identity(s.hs, cf + c(1), s.gens, 60) == 0);

  // Round trip through the closed form.
  auto again = express(to_qseries(cf, s.gens, 70), s.basis, s.ts);
  REQUIRE(again.terms.size() == dec.terms.size());
  for (size_t i = 0; i < dec.terms.size(); ++i) CHECK(again.terms[i].coeff == dec.terms[i].coeff);
}

TEST_CASE("decomposition of basis elements and simple targets") {
  const auto& s = setup();
  for (size_t i = 0; i < s.basis.entries.size(); ++i) {
    auto dec = express(s.basis.entries[i].series, s.basis, s.ts);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].index == i);
    CHECK(dec.terms[0].coeff == P({1}));
    CHECK(closed_form(dec, s.basis, s.k) == s.basis.entries[i].expr);
  }
  auto five = express(LaurentSeries::constant(5, 60), s.basis, s.ts);
  REQUIRE(five.terms.size() == 1);
  CHECK(five.terms[0].pole_order == 0);
  CHECK(five.terms[0].coeff == P({5}));

  // t * b_2 has a pole of order 7 = 5 + 2.
  const auto& b2 = s.basis.entries[1];
  auto dec = express((s.ts * b2.series).truncated(60), s.basis, s.ts);
  CHECK(dec.exact());
  CHECK(closed_form(dec, s.basis, s.k) == b2.expr * RatFunc::x());
  CHECK(dec.terms[0].pole_order == 2);
  CHECK(dec.terms[0].coeff == P({0, 1}));

  CHECK(express(LaurentSeries::zero(60), s.basis, s.ts).terms.empty());
}

TEST_CASE("decomposition is linear") {
  const auto& s = setup();
  auto a = express(s.hs, s.basis, s.ts);
  auto b = express((s.ts * s.basis.entries[3].series).truncated(60), s.basis, s.ts);
  auto ab = express((s.hs * Rational(2) - (s.ts * s.basis.entries[3].series) * Rational(1, 3)).truncated(60), s.basis, s.ts);
  auto k = s.k;
  CHECK(closed_form(ab, s.basis, k) ==
        closed_form(a, s.basis, k) * RatFunc(2) - closed_form(b, s.basis, k) * RatFunc(Rational(1, 3)));
}

TEST_CASE("decomposition failures") {
  const auto& s = setup();
  CHECK_THROWS_AS(express(LaurentSeries::monomial(1, -1, 60), s.basis, s.ts), GapError);
  CHECK_THROWS_AS(express(s.hs.truncated(20), s.basis, s.ts), PrecisionError);
  // A holomorphic series without the required vanishing leaves a residual.
  auto dec = express(LaurentSeries::monomial(1, 3, 60), s.basis, s.ts);
  CHECK_FALSE(dec.exact());
  CHECK(dec.residual_valuation == 3);
}

TEST_CASE("partition congruences") {
  CHECK(count_partitions(6, 6) == 11);
  CHECK(count_partitions(5, 5) == 7);
  CHECK(check_congruence(11, 6, 11, 200).empty());
  auto bad = check_congruence(11, 5, 11, 10);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad[0] == 0);
  CHECK(check_congruence(5, 4, 5, 100).empty());
  CHECK(check_congruence(7, 5, 7, 100).empty());
  // Every coefficient of h is divisible by 11.
  const auto& s = setup();
  for (const auto& c : s.hs.coeffs()) CHECK(mpz_divisible_ui_p(c.get_num_mpz_t(), 11) != 0);
}
