#include "ocb/poly.hpp"

#include "ocb/modular.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ocb {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Integer g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Poly from_z(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return Poly(std::move(c));
}


// ---- modular gcd ----

using modp::u64;
using modp::Vec;

bool divides(const ZPoly& d, const ZPoly& a) {
  auto [q, r] = divmod(from_z(a), from_z(d));
  return r.is_zero();
}

// gcd of primitive integer polynomials by images modulo word-size primes,
// combined with CRT and certified by trial division.
ZPoly modular_gcd(const ZPoly& x, const ZPoly& y) {
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), x.back().get_mpz_t(), y.back().get_mpz_t());
  modp::PrimeSequence primes;
  ZPoly acc;
  Integer modulus = 0;
  int best_degree = static_cast<int>(std::min(x.size(), y.size()));
  ZPoly last_candidate;
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const u64 p = primes.next();
    if (mpz_fdiv_ui(x.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(y.back().get_mpz_t(), p) == 0) continue;
    Vec g = modp::gcd(modp::reduce(x, p), modp::reduce(y, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return ZPoly{Integer(1)};
    if (dg > best_degree) continue;
    const u64 gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = modp::mul(c, gm, p);
    if (dg < best_degree || modulus == 0) {
      best_degree = dg;
      acc.assign(g.size(), Integer(0));
      for (size_t i = 0; i < g.size(); ++i) acc[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(p);
      last_candidate.clear();
      continue;
    }
    // CRT: acc (mod modulus) and g (mod p).
    const u64 minv = modp::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    Integer newmod = modulus * static_cast<unsigned long>(p);
    Integer half = newmod / 2;
    bool changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      const u64 ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      const u64 t = modp::mul((g[i] + p - ai) % p, minv, p);
      if (t != 0) {
        acc[i] += modulus * static_cast<unsigned long>(t);
        changed = true;
      }
      if (acc[i] > half) acc[i] -= newmod;
      else if (acc[i] < -half) acc[i] += newmod;
    }
    modulus = std::move(newmod);
    if (changed) continue;
    ZPoly cand = acc;
    make_primitive(cand);
    if (cand == last_candidate) continue;
    last_candidate = cand;
    if (divides(cand, x) && divides(cand, y)) return cand;
  }
  throw InternalContractViolation("modular gcd did not converge");
}

}  // namespace

std::pair<std::vector<Integer>, Rational> primitive_part(const Poly& p) {
  if (p.is_zero()) return {{}, Rational(0)};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    z[i] = p[i].get_num() * (l / p[i].get_den());
  }
  Integer g = zcontent(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  Rational scale(g, l);
  scale.canonicalize();
  return {std::move(z), scale};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::constant(Rational(1));
  return from_z(modular_gcd(primitive_part(a).first, primitive_part(b).first)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (div_exact(a, gcd(a, b)) * b).monic();
}

Poly reversed(const Poly& p, int degree) {
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(degree - i)] = p[static_cast<size_t>(i)];
  return Poly(std::move(c));
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<size_t>(i)];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly parse_poly(std::string_view text, std::string_view var) {
  std::map<int, Rational> terms;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " in polynomial '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
  };
  skip();
  if (i == text.size()) throw fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i > start) {
      coef = parse_rational(text.substr(start, i - start));
      have_coef = true;
      skip();
    }
    int deg = 0;
    bool star = false;
    if (i < text.size() && text[i] == '*') {
      if (!have_coef) throw fail("dangling '*'");
      ++i;
      skip();
      star = true;
    }
    if (text.substr(i, var.size()) == var) {
      i += var.size();
      deg = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        size_t s = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (s == i) throw fail("expected exponent");
        deg = std::stoi(std::string(text.substr(s, i - s)));
      }
    } else if (star || !have_coef) {
      throw fail("expected '" + std::string(var) + "'");
    }
    terms[deg] += sign > 0 ? coef : Rational(-coef);
  }
  if (terms.empty()) return {};
  std::vector<Rational> c(static_cast<size_t>(terms.rbegin()->first) + 1);
  for (auto& [d, v] : terms) c[static_cast<size_t>(d)] = v;
  return Poly(std::move(c));
}

}  // namespace ocb
