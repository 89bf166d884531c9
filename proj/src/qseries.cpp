#include "ocb/qseries.hpp"

#include <string>

#include "ocb/errors.hpp"

namespace ocb {

namespace {

std::vector<Integer> mul_trunc(const std::vector<Integer>& a, const std::vector<Integer>& b, size_t len) {
  std::vector<Integer> r(len);
  for (size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < len; ++j)
      if (b[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// prod (1 - u^n) to O(u^len): sum (-1)^k u^{k(3k-1)/2} over all integers k.
std::vector<Integer> pentagonal(size_t len) {
  std::vector<Integer> r(len);
  r[0] = 1;
  for (long k = 1;; ++k) {
    const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
    if (static_cast<size_t>(g1) >= len) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    r[static_cast<size_t>(g1)] += sign;
    if (static_cast<size_t>(g2) < len) r[static_cast<size_t>(g2)] += sign;
  }
  return r;
}

std::vector<Integer> power(std::vector<Integer> base, int e, size_t len) {
  std::vector<Integer> acc(len);
  acc[0] = 1;
  while (e > 0) {
    if (e & 1) acc = mul_trunc(acc, base, len);
    e >>= 1;
    if (e > 0) base = mul_trunc(base, base, len);
  }
  return acc;
}

}  // namespace

std::vector<Integer> partition_numbers(int count) {
  if (count <= 0) return {};
  std::vector<Integer> p(static_cast<size_t>(count));
  p[0] = 1;
  for (long n = 1; n < count; ++n) {
    Integer acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const long g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p[static_cast<size_t>(n - g1)];
        if (g2 <= n) acc += p[static_cast<size_t>(n - g2)];
      } else {
        acc -= p[static_cast<size_t>(n - g1)];
        if (g2 <= n) acc -= p[static_cast<size_t>(n - g2)];
      }
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

LaurentSeries euler_product(int delta, int e, int trunc) {
  if (delta < 1) throw EvaluationError("euler product needs delta >= 1, got " + std::to_string(delta));
  if (trunc <= 0) return LaurentSeries::zero(trunc);
  const size_t len = static_cast<size_t>((trunc + delta - 1) / delta);
  std::vector<Integer> u;
  if (e == 0) {
    u.assign(len, Integer(0));
    u[0] = 1;
  } else if (e > 0) {
    u = e == 1 ? pentagonal(len) : power(pentagonal(len), e, len);
  } else {
    auto p = partition_numbers(static_cast<int>(len));
    u = e == -1 ? p : power(p, -e, len);
  }
  std::vector<Integer> c(static_cast<size_t>(trunc));
  for (size_t i = 0; i < len; ++i)
    if (i * static_cast<size_t>(delta) < c.size()) c[i * static_cast<size_t>(delta)] = u[i];
  return LaurentSeries::from_integers(c, trunc);
}

LaurentSeries partition_slice(int a, int b, int trunc) {
  if (a <= 0) throw EvaluationError("partition slice needs a >= 1, got " + std::to_string(a));
  if (b < 0) throw EvaluationError("partition slice needs b >= 0, got " + std::to_string(b));
  if (trunc <= 0) return LaurentSeries::zero(trunc);
  auto p = partition_numbers(a * trunc + b + 1);
  std::vector<Integer> c(static_cast<size_t>(trunc));
  for (int n = 0; n < trunc; ++n) c[static_cast<size_t>(n)] = p[static_cast<size_t>(a * n + b)];
  return LaurentSeries::from_integers(c, trunc);
}

LaurentSeries eisenstein_e4(int trunc) {
  if (trunc <= 0) return LaurentSeries::zero(trunc);
  std::vector<Integer> sigma(static_cast<size_t>(trunc));
  for (long d = 1; d < trunc; ++d) {
    Integer cube = Integer(d) * d * d;
    for (long m = d; m < trunc; m += d) sigma[static_cast<size_t>(m)] += cube;
  }
  sigma[0] = 1;
  for (size_t n = 1; n < sigma.size(); ++n) sigma[n] *= 240;
  return LaurentSeries::from_integers(sigma, trunc);
}

LaurentSeries modular_discriminant(int trunc) { return euler_product(1, 24, trunc - 1).shifted(1); }

LaurentSeries klein_j(int trunc) {
  // J = q^-1 E4^3 / prod(1-q^n)^24; the inner series is needed to O(q^{trunc+1}).
  LaurentSeries e4 = eisenstein_e4(trunc + 1);
  LaurentSeries inner = e4 * e4 * e4 * euler_product(1, -24, trunc + 1);
  return inner.shifted(-1);
}

}  // namespace ocb
