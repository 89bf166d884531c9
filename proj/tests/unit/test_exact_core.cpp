#include <random>

#include "doctest.h"
#include "ocb/matrix.hpp"
#include "ocb/poly.hpp"
#include "ocb/ratfunc.hpp"

using namespace ocb;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Poly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  for (auto& x : c) {
    x = Rational(d(rng), 1 + (d(rng) + 9) % 4);
    x.canonicalize();
  }
  if (is_zero(c.back())) c.back() = 1;
  return Poly(std::move(c));
}

bool reduced(const Rational& r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1 && r.get_den() > 0;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("15")) == "15");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("polynomial text round trip") {
  Poly p = P({5536128125, -7903458, 3125});
  CHECK(to_string(p) == "3125*x^2 - 7903458*x + 5536128125");
  CHECK(parse_poly(to_string(p)) == p);
  Poly q(std::vector<Rational>{Rational(1, 2), Rational(0), Rational(-1)});
  CHECK(to_string(q) == "-x^2 + 1/2");
  CHECK(parse_poly("-x^2 + 1/2") == q);
  CHECK(parse_poly("0").is_zero());
  CHECK_THROWS_AS(parse_poly("3*"), ParseError);
}

TEST_CASE("nullspace examples") {
  SUBCASE("injective 1x1") {
    QMatrix m({{Rational(1)}});
    CHECK(nullspace(m).empty());
  }
  SUBCASE("one relation, first nonzero entry normalized to 1") {
    QMatrix m({{Rational(1), Rational(1)}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == QVector{Rational(1), Rational(-1)});
  }
  SUBCASE("zero-row input gives the standard basis") {
    QMatrix m(0, 3);
    CHECK(nullspace(m).size() == 3);
  }
}

TEST_CASE("rref examples") {
  auto id = QMatrix::identity(3);
  auto r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivots == std::vector<size_t>{0, 1, 2});

  QMatrix m({{Rational(2), Rational(4)}, {Rational(1), Rational(2)}});
  auto s = rref(m);
  CHECK(s.matrix == QMatrix({{Rational(1), Rational(2)}, {Rational(0), Rational(0)}}));
  CHECK(s.pivots == std::vector<size_t>{0});
}

TEST_CASE("nullspace and rref invariants on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const size_t rows = 1 + static_cast<size_t>(trial % 6), cols = 1 + static_cast<size_t>((trial * 7) % 8);
    QMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        m(i, j) = Rational(d(rng), 1 + (trial + static_cast<int>(j)) % 3);
        m(i, j).canonicalize();
      }
    // Force some rank deficiency.
    if (rows > 2)
      for (size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3 - m(1, j);
    for (const auto& v : nullspace(m)) {
      auto mv = mat_vec(m, v);
      for (const auto& x : mv) CHECK(is_zero(x));
      for (const auto& x : v) CHECK(reduced(x));
    }
    auto r1 = rref(m);
    auto r2 = rref(r1.matrix);
    CHECK(r1.matrix == r2.matrix);
    CHECK(r1.pivots == r2.pivots);
    CHECK(r1.pivots.size() + nullspace(m).size() == cols);
  }
}

TEST_CASE("extended gcd") {
  auto e = ext_gcd(P({-1, 0, 1}), P({-1, 1}));
  CHECK(e.g == P({-1, 1}));
  auto f = ext_gcd(P({0, 1}), P({1}));
  CHECK(f.g == P({1}));
  CHECK(f.s.is_zero());
  CHECK(f.t == P({1}));
  CHECK_THROWS(ext_gcd(Poly(), Poly()));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 3);
    auto r = ext_gcd(a, b);
    CHECK(r.s * a + r.t * b == r.g);
    CHECK(is_one(r.g.lc()));
    CHECK(gcd(a, b) == r.g);
  }
}

TEST_CASE("primitive gcd agrees with Euclid on structured inputs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Poly common = random_poly(rng, 1 + trial % 3);
    Poly a = random_poly(rng, 4) * common, b = random_poly(rng, 3) * common;
    Poly g = gcd(a, b);
    CHECK(g == generic_gcd(a, b));
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(g.degree() >= common.degree());
  }
}

TEST_CASE("rational functions form a field") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    RatFunc a(random_poly(rng, 1 + trial % 4), random_poly(rng, trial % 3));
    RatFunc b(random_poly(rng, 2), random_poly(rng, 1 + trial % 2));
    CHECK(a * a.inverse() == RatFunc(1));
    CHECK((a / b) * (b / a) == RatFunc(1));
    CHECK((a + b) - b == a);
    RatFunc s = a * b + a;
    CHECK(is_one(s.den().lc()));
    CHECK(gcd(s.num(), s.den()).degree() == 0);
    for (const auto& c : s.num().coeffs()) CHECK(reduced(c));
  }
  RatFunc f(P({1, 2}), P({0, 0, 1}));
  CHECK(f.degree() == -1);
  CHECK(f.at_reciprocal() == RatFunc(P({0, 2, 1})));
  CHECK(parse_ratfunc(to_string(f)) == f);
}

TEST_CASE("Bareiss determinant over Q[x]") {
  Matrix<Poly> m(2, 2);
  m(0, 0) = P({0, 1});
  m(0, 1) = P({1});
  m(1, 0) = P({1});
  m(1, 1) = P({0, 1});
  Poly d = bareiss_det(m, [](const Poly& a, const Poly& b) { return div_exact(a, b); });
  CHECK(d == P({-1, 0, 1}));
}
