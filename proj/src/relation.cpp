#include "ocb/relation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "ocb/errors.hpp"
#include "ocb/matrix.hpp"

namespace ocb {

BivariatePoly::BivariatePoly(std::map<Key, Integer> coeffs) {
  for (auto& [k, v] : coeffs)
    if (v != 0) c_.emplace(k, std::move(v));
}

int BivariatePoly::degx() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.first);
  return d;
}

int BivariatePoly::degy() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.second);
  return d;
}

Integer BivariatePoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Integer(0) : it->second;
}

Poly BivariatePoly::y_coeff(int j) const {
  std::vector<Rational> c;
  for (const auto& [k, v] : c_) {
    if (k.second != j) continue;
    if (c.size() <= static_cast<size_t>(k.first)) c.resize(static_cast<size_t>(k.first) + 1);
    c[static_cast<size_t>(k.first)] = Rational(v);
  }
  return Poly(std::move(c));
}

bool BivariatePoly::is_monic_in_y() const {
  Poly top = y_coeff(degy());
  return top.degree() == 0 && top.lc() == 1;
}

std::string BivariatePoly::to_text() const {
  std::string out;
  for (const auto& [k, v] : c_) out += std::to_string(k.first) + " " + std::to_string(k.second) + " " + v.get_str() + "\n";
  return out;
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
  std::map<Key, Integer> c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int i = -1, j = -1;
    std::string coef, extra;
    if (!(fields >> i >> j >> coef) || (fields >> extra) || i < 0 || j < 0)
      throw ParseError("expected 'i j coefficient'", lineno, 1);
    Integer v;
    if (v.set_str(coef, 10) != 0) throw ParseError("bad integer coefficient '" + coef + "'", lineno, 1);
    if (c.count({i, j})) throw ParseError("duplicate term " + std::to_string(i) + " " + std::to_string(j), lineno, 1);
    c[{i, j}] = v;
  }
  return BivariatePoly(std::move(c));
}

std::string to_display_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest y power first, then highest x power.
  std::vector<std::pair<BivariatePoly::Key, Integer>> terms(p.coeffs().begin(), p.coeffs().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  for (const auto& [k, v] : terms) {
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    Integer mag = abs(v);
    std::string mono;
    if (k.first > 0) mono += k.first == 1 ? "x" : "x^" + std::to_string(k.first);
    if (k.second > 0) mono += std::string(mono.empty() ? "" : "*") + (k.second == 1 ? "y" : "y^" + std::to_string(k.second));
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

int relation_precision(int n, int m) { return n * m + (n + 1) * (m + 1) + 10; }

namespace {

std::vector<LaurentSeries> powers(const LaurentSeries& s, int count) {
  std::vector<LaurentSeries> p;
  p.reserve(static_cast<size_t>(count) + 1);
  p.push_back(LaurentSeries::constant(Rational(1), s.relative_precision()));
  for (int k = 1; k <= count; ++k) p.push_back(k == 1 ? s : p.back() * s);
  return p;
}

}  // namespace

BivariatePoly find_relation(const LaurentSeries& ts, const LaurentSeries& fs) {
  if (ts.is_zero() || fs.is_zero()) throw DegenerateInput("generator series is zero to known precision");
  const int n = ts.pole_order(), m = fs.pole_order();
  if (n < 1 || m < 1) throw DegenerateInput("generators must have poles at q = 0 (pole orders " + std::to_string(n) + ", " + std::to_string(m) + ")");
  if (std::gcd(n, m) != 1)
    throw CoprimalityError("pole orders " + std::to_string(n) + " and " + std::to_string(m) + " are not coprime");
  const int need = relation_precision(n, m);
  if (ts.trunc() < need || fs.trunc() < need)
    throw InsufficientPrecision("relation search needs both series to O(q^" + std::to_string(need) + "), got O(q^" +
                                std::to_string(std::min(ts.trunc(), fs.trunc())) + ")");

  auto tp = powers(ts, m);
  auto fp = powers(fs, n);
  std::vector<LaurentSeries> mono;
  std::vector<BivariatePoly::Key> keys;
  int window = INT32_MAX, lo = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      mono.push_back(tp[static_cast<size_t>(i)] * fp[static_cast<size_t>(j)]);
      keys.emplace_back(i, j);
      window = std::min(window, mono.back().trunc());
      lo = std::min(lo, mono.back().valuation());
    }
  const int unknowns = static_cast<int>(mono.size());
  if (window - lo < unknowns + 10)
    throw InsufficientPrecision("only " + std::to_string(window - lo) + " coefficient equations for " + std::to_string(unknowns) + " unknowns");

  QMatrix a(static_cast<size_t>(window - lo), mono.size());
  for (size_t c = 0; c < mono.size(); ++c)
    for (int e = std::max(lo, mono[c].valuation()); e < window; ++e) a(static_cast<size_t>(e - lo), c) = mono[c].coeff(e);

  auto ns = nullspace(a);
  if (ns.empty()) throw InsufficientPrecision("no relation of bidegree (" + std::to_string(m) + ", " + std::to_string(n) + ") fits the data");
  if (ns.size() > 1)
    throw DegenerateInput("relation space has dimension " + std::to_string(ns.size()) + "; the generators do not give a degree " + std::to_string(n) + " extension");

  // Scale to coprime integers.
  const auto& v = ns[0];
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> z(v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    z[k] = v[k].get_num() * (l / v[k].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[k].get_mpz_t());
  }
  std::map<BivariatePoly::Key, Integer> coeffs;
  for (size_t k = 0; k < v.size(); ++k)
    if (z[k] != 0) coeffs[keys[k]] = z[k] / g;
  BivariatePoly p(std::move(coeffs));
  const Poly top = p.y_coeff(p.degy());
  if (sgn(top.lc()) < 0) {
    std::map<BivariatePoly::Key, Integer> neg;
    for (const auto& [k, c] : p.coeffs()) neg[k] = -c;
    p = BivariatePoly(std::move(neg));
  }
  if (p.degy() != n || p.degx() != m)
    throw DegenerateInput("relation has bidegree (" + std::to_string(p.degx()) + ", " + std::to_string(p.degy()) + "), expected (" +
                          std::to_string(m) + ", " + std::to_string(n) + ")");
  return p;
}

LaurentSeries relation_residual(const BivariatePoly& p, const LaurentSeries& ts, const LaurentSeries& fs) {
  if (p.is_zero()) throw DegenerateInput("the zero polynomial is not a relation");
  const int n = p.degy(), m = p.degx();
  auto tp = powers(ts, m);
  LaurentSeries acc;
  bool have = false;
  // Horner in y.
  for (int j = n; j >= 0; --j) {
    LaurentSeries cj;
    bool cj_have = false;
    for (int i = 0; i <= m; ++i) {
      Integer c = p.coeff(i, j);
      if (c == 0) continue;
      LaurentSeries term = tp[static_cast<size_t>(i)] * Rational(c);
      cj = cj_have ? cj + term : term;
      cj_have = true;
    }
    if (have) acc = acc * fs;
    if (cj_have) {
      acc = have ? acc + cj : cj;
      have = true;
    }
  }
  return acc;
}

int verify_relation(const BivariatePoly& p, const LaurentSeries& ts, const LaurentSeries& fs) {
  return relation_residual(p, ts, fs).valuation();
}

}  // namespace ocb
