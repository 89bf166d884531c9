#include "ocb/modular.hpp"

#include <utility>

namespace ocb::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mul(a, a, p))
    if (e & 1) r = mul(r, a, p);
  return r;
}

u64 PrimeSequence::next() {
  do {
    cur_ -= 2;
  } while (mpz_probab_prime_p(cur_.get_mpz_t(), 25) == 0);
  return cur_.get_ui();
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec reduce(const std::vector<Integer>& z, u64 p) {
  Vec r(z.size());
  for (size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
  trim(r);
  return r;
}

bool reduce(const Rational& q, u64 p, u64& out) {
  const u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return false;
  out = mul(mpz_fdiv_ui(q.get_num_mpz_t(), p), inv(d, p), p);
  return true;
}

Vec mul(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void rem_monic(Vec& a, const Vec& d, u64 p) {
  const size_t m = d.size() - 1;
  while (a.size() > m) {
    const u64 c = a.back();
    const size_t shift = a.size() - 1 - m;
    if (c != 0)
      for (size_t j = 0; j < m; ++j) a[shift + j] = sub(a[shift + j], mul(c, d[j], p), p);
    a.pop_back();
    trim(a);
  }
}

Vec gcd(Vec a, Vec b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 ib = inv(b.back(), p);
    while (a.size() >= b.size()) {
      const u64 c = mul(a.back(), ib, p);
      const size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j], p), p);
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 ia = inv(a.back(), p);
    for (auto& c : a) c = mul(c, ia, p);
  }
  return a;
}

Vec inverse_or_gcd(const Vec& a, const Vec& d, u64 p, Vec& s) {
  Vec r0 = d, r1 = a, s0, s1{1};
  trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r
    Vec q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    const u64 ib = inv(r1.back(), p);
    while (r0.size() >= r1.size() && !r0.empty()) {
      const u64 c = mul(r0.back(), ib, p);
      const size_t shift = r0.size() - r1.size();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) r0[shift + j] = sub(r0[shift + j], mul(c, r1[j], p), p);
      trim(r0);
    }
    trim(q);
    Vec qs = mul(q, s1, p);
    Vec s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (size_t j = 0; j < qs.size(); ++j) s2[j] = sub(s2[j], qs[j], p);
    trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    std::swap(r0, r1);
  }
  // r0 = gcd up to a unit, s0 * a = r0 mod d
  const u64 il = inv(r0.back(), p);
  for (auto& c : r0) c = mul(c, il, p);
  for (auto& c : s0) c = mul(c, il, p);
  s = std::move(s0);
  return r0;
}

void crt(Integer& acc, const Integer& m, u64 r, u64 p) {
  const u64 am = mpz_fdiv_ui(acc.get_mpz_t(), p);
  const u64 mm = mpz_fdiv_ui(m.get_mpz_t(), p);
  const u64 t = mul(sub(r, am, p), inv(mm, p), p);
  if (t != 0) acc += m * static_cast<unsigned long>(t);
}

bool rational_reconstruct(const Integer& u, const Integer& m, Rational& out) {
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace ocb::modp
