#include <functional>

#include "doctest.h"
#include "ocb/errors.hpp"
#include "ocb/qseries.hpp"
#include "ocb/recipe.hpp"

using namespace ocb;

namespace {

// Number of partitions of n into parts <= max_part, by direct recursion.
long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) total += count_partitions(n - part, part);
  return total;
}

// prod_{n=1}^{K} (1 - q^{delta n})^e expanded factor by factor.
std::vector<Integer> naive_euler(int delta, int e, int trunc) {
  std::vector<Integer> r(static_cast<size_t>(trunc));
  r[0] = 1;
  for (int n = 1; delta * n < trunc; ++n) {
    const int k = delta * n;
    for (int rep = 0; rep < std::abs(e); ++rep) {
      if (e > 0) {
        for (int i = trunc - 1; i >= k; --i) r[static_cast<size_t>(i)] -= r[static_cast<size_t>(i - k)];
      } else {
        for (int i = k; i < trunc; ++i) r[static_cast<size_t>(i)] += r[static_cast<size_t>(i - k)];
      }
    }
  }
  return r;
}

std::vector<Integer> as_integers(const LaurentSeries& s, int from, int to) {
  std::vector<Integer> v;
  for (int k = from; k < to; ++k) v.push_back(s.coeff(k).get_num());
  return v;
}

std::vector<long> as_longs(const LaurentSeries& s, int from, int to) {
  std::vector<long> v;
  for (int k = from; k < to; ++k) v.push_back(s.coeff(k).get_num().get_si());
  return v;
}

const char* kT = "(* (q -5) (euler 1 12) (euler 11 -12))";

}  // namespace

TEST_CASE("euler product against direct expansion") {
  auto s = euler_product(1, 1, 6);
  CHECK(as_longs(s, 0, 6) == std::vector<long>{1, -1, -1, 0, 0, 1});
  CHECK(s.trunc() == 6);

  auto z = euler_product(3, 0, 9);
  CHECK(as_longs(z, 0, 9) == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 0});

  std::vector<long> brute;
  for (int n = 0; n < 8; ++n) brute.push_back(count_partitions(n, n));
  CHECK(brute == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15});
  CHECK(as_longs(euler_product(1, -1, 8), 0, 8) == brute);

  for (int delta : {1, 2, 11})
    for (int e : {-24, -12, -2, 2, 12, 24}) {
      CAPTURE(delta);
      CAPTURE(e);
      CHECK(as_integers(euler_product(delta, e, 40), 0, 40) == naive_euler(delta, e, 40));
    }
}

TEST_CASE("euler product inverse pairs") {
  for (int e : {1, 2, 5, 12}) {
    auto a = euler_product(11, e, 60) * euler_product(11, -e, 60);
    CHECK(a == LaurentSeries::constant(Rational(1), 60));
  }
}

TEST_CASE("series arithmetic and truncation tracking") {
  auto one_minus_q = LaurentSeries(0, {Rational(1), Rational(-1)}, 4);
  auto g = series_inv(one_minus_q);
  CHECK(g == LaurentSeries(0, {Rational(1), Rational(1), Rational(1), Rational(1)}, 4));
  auto d = series_derivative(LaurentSeries::monomial(Rational(1), -5, 10));
  CHECK(d.valuation() == -6);
  CHECK(d.leading() == -5);
  CHECK(d.trunc() == 9);

  // trunc of a product: min(v1 + T2, v2 + T1)
  auto a = LaurentSeries(-5, {Rational(1), Rational(2)}, 3);
  auto b = LaurentSeries(-2, {Rational(1)}, 10);
  CHECK((a * b).trunc() == std::min(-5 + 10, -2 + 3));
  CHECK(series_inv(a).trunc() == 3 + 2 * 5);
  CHECK_THROWS_AS(series_inv(LaurentSeries::zero(5)), EvaluationError);
  CHECK(pole_order(LaurentSeries::constant(Rational(1), 5)) == 0);
  CHECK_THROWS_AS(pole_order(LaurentSeries::zero(5)), EvaluationError);
  CHECK_THROWS_AS(a.coeff(3), PrecisionError);
}

TEST_CASE("partition slices and congruence-friendly data") {
  auto p = partition_numbers(12);
  CHECK(p[6] == 11);
  CHECK(p[5] == 7);
  CHECK(evaluate_recipe(parse_recipe("(pslice 1 0)"), 30) == euler_product(1, -1, 30));
  auto s = partition_slice(11, 6, 5);
  CHECK(s.coeff(0) == 11);
  CHECK(s.coeff(1) == count_partitions(17, 17));
  CHECK_THROWS_AS(evaluate_recipe(parse_recipe("(pslice 0 1)"), 5), EvaluationError);
}

TEST_CASE("modular forms") {
  auto e4 = eisenstein_e4(4);
  CHECK(as_longs(e4, 0, 4) == std::vector<long>{1, 240, 2160, 6720});
  auto delta = modular_discriminant(4);
  CHECK(as_longs(delta, 1, 4) == std::vector<long>{1, -24, 252});
  auto j = klein_j(3);
  CHECK(j.valuation() == -1);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.coeff(2) == 21493760);
}

TEST_CASE("recipes for the level 11 functions") {
  const std::string t = std::string("(let t ") + kT + ")\n";
  auto ts = evaluate_recipe(parse_recipe(t + "t"), 10);
  CHECK(ts.pole_order() == 5);
  CHECK(ts.leading() == 1);
  CHECK(ts.trunc() == 10);

  auto h = evaluate_recipe(parse_recipe(t + "(* (q 1) t (euler 11 1) (pslice 11 6))"), 1);
  CHECK(h.trunc() == 1);
  CHECK(h == LaurentSeries(-4, {Rational(11), Rational(165), Rational(748), Rational(1639), Rational(3553)}, 1));
  CHECK(h.pole_order() == 4);

  auto f1 = evaluate_recipe(parse_recipe(t + "(* (d/dq t) (euler 1 -2) (euler 11 -2))"), 20);
  CHECK(f1.pole_order() == 6);
  CHECK(f1.leading() == -5);
  CHECK(f1.trunc() == 20);

  auto f2 = evaluate_recipe(parse_recipe(t + "(* (J) (^ t 3))"), 5);
  CHECK(f2.pole_order() == 16);
  CHECK(f2.leading() == 1);

  // f * q prod (1-q^n)^2 (1-q^{11n})^2 == q dt/dq
  auto lhs = evaluate_recipe(parse_recipe(t + "(* (* (d/dq t) (euler 1 -2) (euler 11 -2)) (q 1) (euler 1 2) (euler 11 2))"), 60);
  auto rhs = evaluate_recipe(parse_recipe(t + "(* (q 1) (d/dq t))"), 60);
  CHECK(lhs == rhs);
}

TEST_CASE("recipe parser errors carry positions") {
  try {
    parse_recipe("(* (q -5)\n   (eulr 1 12))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_recipe("(* (q 1)"), ParseError);
  CHECK_THROWS_AS(parse_recipe("(+ a 1)"), ParseError);
  CHECK_THROWS_AS(parse_recipe(""), ParseError);
  CHECK_THROWS_AS(parse_recipe("(q 1) (q 2)"), ParseError);
  CHECK_THROWS_AS(evaluate_recipe(parse_recipe("(/ 1 (- (q 1) (q 1)))"), 5), EvaluationError);
  auto r = parse_recipe("; comment\n(let x (q 2))\n(+ x 3/2) ; tail");
  CHECK(to_string(r) == "(+ (q 2) 3/2)");
}
