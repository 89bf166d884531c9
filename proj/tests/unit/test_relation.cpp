#include "doctest.h"
#include "common.hpp"
#include "ocb/errors.hpp"
#include "ocb/recipe.hpp"
#include "ocb/relation.hpp"

using namespace ocb;

namespace {

LaurentSeries load(const std::string& name, int trunc) { return evaluate_recipe(load_recipe(std::string(OCB_DATA_DIR) + "/n11/" + name), trunc); }

BivariatePoly example1_relation() {
  std::map<BivariatePoly::Key, Integer> c;
  c[{0, 5}] = 1;
  c[{1, 4}] = 170;
  c[{2, 3}] = 9345;
  c[{3, 2}] = 167320;
  c[{6, 0}] = 3125;
  c[{5, 0}] = -7903458;
  c[{4, 0}] = Integer(3125) * 1771561;
  return BivariatePoly(c);
}

}  // namespace

TEST_CASE("relation text round trip") {
  auto p = example1_relation();
  CHECK(BivariatePoly::parse(p.to_text()) == p);
  CHECK(BivariatePoly::parse("# comment\n0 1 1\n\n2 0 -1\n") == BivariatePoly({{{0, 1}, 1}, {{2, 0}, -1}}));
  CHECK_THROWS_AS(BivariatePoly::parse("0 1 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(BivariatePoly::parse("0 1\n"), ParseError);
  CHECK(to_display_string(BivariatePoly({{{0, 1}, 1}, {{2, 0}, -1}})) == "y - x^2");
}

TEST_CASE("relation of toy series") {
  // ts = q^-1, fs = q^-2 + q^-1 satisfy y = x^2 + x.
  auto ts = LaurentSeries::monomial(Rational(1), -1, 40);
  auto fs = LaurentSeries(-2, {Rational(1), Rational(1)}, 40);
  auto p = find_relation(ts, fs);
  CHECK(p == BivariatePoly({{{0, 1}, 1}, {{1, 0}, -1}, {{2, 0}, -1}}));
  CHECK(p.is_monic_in_y());

  auto g = LaurentSeries::monomial(Rational(1), -2, 40);
  CHECK_THROWS_AS(find_relation(g, LaurentSeries::monomial(Rational(1), -4, 40)), CoprimalityError);
  CHECK_THROWS_AS(find_relation(LaurentSeries::monomial(Rational(1), 1, 40), fs), DegenerateInput);
  CHECK_THROWS_AS(find_relation(ts, LaurentSeries(-2, {Rational(1), Rational(1)}, 5)), InsufficientPrecision);
}

TEST_CASE("level 11 relation with f of pole order 6") {
  const int T = relation_precision(5, 6);
  auto ts = load("t.recipe", T);
  auto fs = load("f1.recipe", T);
  auto p = find_relation(ts, fs);
  CHECK(p == example1_relation());
  CHECK(p.degx() == 6);
  CHECK(p.degy() == 5);

  // Independent check at twice the precision used to find it.
  auto ts2 = load("t.recipe", 2 * T);
  auto fs2 = load("f1.recipe", 2 * T);
  auto r = relation_residual(p, ts2, fs2);
  CHECK(r.is_zero());
  CHECK(verify_relation(p, ts2, fs2) == r.trunc());

  std::map<BivariatePoly::Key, Integer> c = p.coeffs();
  c[{3, 2}] += 1;
  BivariatePoly bad(c);
  CHECK(verify_relation(bad, ts2, fs2) < r.trunc());
}

TEST_CASE("level 11 relation with f = J t^3") {
  const int T = relation_precision(5, 16);
  auto p = find_relation(load("t.recipe", T), load("f2.recipe", T));
  CHECK(p.degx() == 16);
  CHECK(p.degy() == 5);
  CHECK(p.is_monic_in_y());
  CHECK(p.coeff(1, 4) == Integer("-414272545727172"));
  CHECK(p.coeff(3, 4) == -3732);
  CHECK(p.coeff(16, 0) == -1);
  auto r = relation_residual(p, load("t.recipe", 2 * T), load("f2.recipe", 2 * T));
  CHECK(r.is_zero());
}

TEST_CASE("shipped relation files match recomputation") {
  const int T = relation_precision(5, 6);
  auto p = find_relation(load("t.recipe", T), load("f1.recipe", T));
  CHECK(p.to_text() == testing::read_file(testing::data_path("relation1.txt")));
  CHECK(BivariatePoly::parse(p.to_text()) == p);
  CHECK(testing::load_relation("relation2.txt").degx() == 16);
}
