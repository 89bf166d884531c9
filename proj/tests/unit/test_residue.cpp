#include <random>

#include "doctest.h"
#include "ocb/residue.hpp"

using namespace ocb;

namespace {

using Mat = std::vector<std::vector<Poly>>;

Poly random_poly(std::mt19937& g, int deg, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound), den(1, 9);
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.push_back(Rational(c(g), den(g)));
  for (auto& r : v) r.canonicalize();
  return Poly(std::move(v));
}

// r x c matrix of rank at most k.
Mat low_rank(std::mt19937& g, size_t r, size_t c, size_t k, int deg) {
  Mat left(r, std::vector<Poly>(k)), right(k, std::vector<Poly>(c)), out(r, std::vector<Poly>(c));
  for (auto& row : left)
    for (auto& e : row) e = random_poly(g, deg, 50);
  for (auto& row : right)
    for (auto& e : row) e = random_poly(g, deg, 50);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      for (size_t l = 0; l < k; ++l) out[i][j] += left[i][l] * right[l][j];
  return out;
}

}  // namespace

TEST_CASE("modular residue kernel agrees with exact elimination") {
  std::mt19937 g(11);
  const Poly d({Rational(-2), Rational(0), Rational(0), Rational(1)});  // x^3 - 2
  for (size_t k = 0; k <= 4; ++k) {
    Mat a = low_rank(g, 6, 4, k, 4);
    auto fast = residue_kernel(a, 4, d);
    auto slow = residue_kernel_exact(a, 4, d);
    CHECK(fast.free == slow.free);
    REQUIRE(fast.vecs.size() == slow.vecs.size());
    for (size_t s = 0; s < fast.vecs.size(); ++s)
      for (size_t j = 0; j < 4; ++j) CHECK(fast.vecs[s][j] == slow.vecs[s][j]);
    CHECK(fast.vecs.size() == 4 - std::min<size_t>(k, 4));
  }
}

TEST_CASE("residue kernel with large coefficients") {
  const Poly d({Rational(7), Rational(-3), Rational(0), Rational(0), Rational(0), Rational(1)});
  Rational c(Integer("123456789012345678901234567890"), Integer("987654321987654321"));
  c.canonicalize();
  Poly big({c, Rational(5)});
  Mat a{{big, big * big}, {Poly::constant(Rational(3)), big * Poly::constant(Rational(3))}};
  auto fast = residue_kernel(a, 2, d);
  auto slow = residue_kernel_exact(a, 2, d);
  REQUIRE(fast.vecs.size() == 1);
  CHECK(fast.free == slow.free);
  CHECK(fast.vecs[0][0] == slow.vecs[0][0]);
}

TEST_CASE("zero divisor pivot reports a factor of the modulus") {
  const Poly d({Rational(2), Rational(-3), Rational(1)});  // (x-1)(x-2)
  Mat a{{Poly({Rational(-1), Rational(1)}), Poly::constant(Rational(1))}};
  Poly f1, f2;
  try {
    residue_kernel(a, 2, d);
  } catch (const SplitFound& s) {
    f1 = s.factor;
  }
  try {
    residue_kernel_exact(a, 2, d);
  } catch (const SplitFound& s) {
    f2 = s.factor;
  }
  CHECK(f1 == Poly({Rational(-1), Rational(1)}));
  CHECK(f2 == f1);
}
