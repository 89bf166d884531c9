#pragma once

#include <vector>

#include "ocb/rational.hpp"

// Arithmetic modulo word-size primes, used to accelerate exact computations
// whose results are certified over Q afterwards.
namespace ocb::modp {

using u64 = unsigned long long;
// Dense polynomial over F_p, index = degree, no trailing zeros.
using Vec = std::vector<u64>;

inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

// Primes below 2^31, descending.
class PrimeSequence {
 public:
  u64 next();

 private:
  Integer cur_ = 2147483647;
};

void trim(Vec& a);
Vec reduce(const std::vector<Integer>& z, u64 p);
// False when the denominator vanishes modulo p.
bool reduce(const Rational& q, u64 p, u64& out);

Vec mul(const Vec& a, const Vec& b, u64 p);
// a mod d for monic d.
void rem_monic(Vec& a, const Vec& d, u64 p);
// Monic gcd.
Vec gcd(Vec a, Vec b, u64 p);
// s with s*a = gcd(a, d) mod d; returns the monic gcd.
Vec inverse_or_gcd(const Vec& a, const Vec& d, u64 p, Vec& s);

// acc (mod m) and r (mod p) -> acc (mod m*p), acc in [0, m*p).
void crt(Integer& acc, const Integer& m, u64 r, u64 p);
// a/b with |a|, |b| <= sqrt(m/2) and a = b*u mod m.
bool rational_reconstruct(const Integer& u, const Integer& m, Rational& out);

}  // namespace ocb::modp
