#include "ocb/intbasis.hpp"

#include <algorithm>
#include <sstream>

#include "ocb/errors.hpp"
#include "ocb/residue.hpp"

namespace ocb {

namespace {

using PolyVec = std::vector<Poly>;
using PolyMat = std::vector<PolyVec>;

const Poly kOne = Poly::constant(Rational(1));

// An order given by basis rows (power-basis numerators) over one denominator;
// rows[i] has y-degree i.
struct Order {
  PolyMat rows;
  Poly den = kOne;
};

FieldElement element(const FieldPtr& k, const PolyVec& row, const Poly& den) { return FieldElement(k, row, den); }

// Coordinates of z with respect to the order basis; z need not lie in it.
std::vector<RatFunc> order_coords(const Order& o, const FieldElement& z) {
  const size_t n = o.rows.size();
  std::vector<RatFunc> rest(n);
  for (size_t j = 0; j < n; ++j) rest[j] = RatFunc(z.numerators()[j] * o.den, z.denominator());
  std::vector<RatFunc> c(n);
  for (size_t i = n; i-- > 0;) {
    if (rest[i].is_zero()) continue;
    c[i] = rest[i] / RatFunc(o.rows[i][i]);
    for (size_t j = 0; j <= i; ++j)
      if (!o.rows[i][j].is_zero()) rest[j] -= c[i] * RatFunc(o.rows[i][j]);
  }
  return c;
}

PolyVec polynomial_coords(const Order& o, const FieldElement& z) {
  PolyVec r;
  for (const auto& c : order_coords(o, z)) {
    if (!c.is_polynomial()) throw InternalContractViolation("order is not closed under multiplication");
    r.push_back(c.num());
  }
  return r;
}

// mult[i][l] = coordinates of w_i * w_l.
std::vector<PolyMat> multiplication_table(const FieldPtr& k, const Order& o) {
  const size_t n = o.rows.size();
  std::vector<FieldElement> w;
  for (size_t i = 0; i < n; ++i) w.push_back(element(k, o.rows[i], o.den));
  std::vector<PolyMat> t(n, PolyMat(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = i; l < n; ++l) {
      t[i][l] = polynomial_coords(o, w[i] * w[l]);
      if (l != i) t[l][i] = t[i][l];
    }
  return t;
}

Order make_order(PolyMat gens, Poly den, size_t n) {
  Order o;
  o.rows = hermite_lower(std::move(gens), n);
  Poly g = den;
  for (const auto& r : o.rows)
    for (const auto& e : r) {
      if (g.degree() == 0) break;
      if (!e.is_zero()) g = gcd(g, e);
    }
  if (g.degree() > 0) {
    for (auto& r : o.rows)
      for (auto& e : r) e = div_exact(e, g);
    den = div_exact(den, g);
  }
  // Keep the basis monic-diagonal after removing the common factor.
  for (size_t i = 0; i < n; ++i) {
    Rational s = 1 / o.rows[i][i].lc();
    if (s != 1)
      for (auto& e : o.rows[i]) e *= s;
  }
  o.den = den;
  return o;
}

// One multiplier-ring step at D. Returns false when the order is maximal at D.
bool enlarge_at(const FieldPtr& k, Order& o, const Poly& d) {
  const size_t n = o.rows.size();
  auto mult = multiplication_table(k, o);

  PolyVec tr(n);
  for (size_t i = 0; i < n; ++i) tr[i] = trace(element(k, o.rows[i], o.den)).num();
  PolyMat tm(n, PolyVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l)
      for (size_t m = 0; m < n; ++m)
        if (!mult[i][l][m].is_zero()) tm[i][l] += mult[i][l][m] * tr[m];

  // Radical I of D*O: kernel of the trace form modulo D.
  auto [rad, piv] = residue_kernel(tm, n, d);
  std::vector<bool> is_piv(n, false);
  for (size_t p : piv) is_piv[p] = true;
  PolyMat eta = rad;
  for (size_t j = 0; j < n; ++j)
    if (!is_piv[j]) {
      PolyVec v(n);
      v[j] = d;
      eta.push_back(std::move(v));
    }

  auto eta_coords = [&](const PolyVec& v) {
    PolyVec c(n);
    for (size_t s = 0; s < piv.size(); ++s) c[s] = v[piv[s]];
    size_t idx = piv.size();
    for (size_t j = 0; j < n; ++j) {
      if (is_piv[j]) continue;
      Poly r = v[j];
      for (size_t s = 0; s < piv.size(); ++s)
        if (!c[s].is_zero() && !rad[s][j].is_zero()) r -= c[s] * rad[s][j];
      c[idx++] = div_exact(r, d);
    }
    return c;
  };

  // Row u of phi: eta-coordinates of w_u * eta_k modulo D, for all k.
  PolyMat phi_t(n * n, PolyVec(n));
  for (size_t u = 0; u < n; ++u)
    for (size_t kk = 0; kk < n; ++kk) {
      PolyVec prod(n);
      for (size_t l = 0; l < n; ++l) {
        if (eta[kk][l].is_zero()) continue;
        for (size_t m = 0; m < n; ++m)
          if (!mult[u][l][m].is_zero()) prod[m] += eta[kk][l] * mult[u][l][m];
      }
      PolyVec c = eta_coords(prod);
      for (size_t s = 0; s < n; ++s) phi_t[kk * n + s][u] = std::move(c[s]);
    }
  auto [ker, kfree] = residue_kernel(phi_t, n, d);
  if (ker.empty()) return false;

  // O' = U / D with U = lifts of the kernel + D*O. A kernel vector for free
  // column f is supported on columns <= f, so the generators stay triangular.
  PolyMat gens(n, PolyVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) gens[i][j] = o.rows[i][j] * d;
  for (size_t s = 0; s < ker.size(); ++s) {
    PolyVec row(n);
    for (size_t i = 0; i <= kfree[s]; ++i)
      if (!ker[s][i].is_zero())
        for (size_t j = 0; j <= i; ++j) row[j] += ker[s][i] * o.rows[i][j];
    gens[kfree[s]] = std::move(row);
  }
  o = make_order(std::move(gens), o.den * d, n);
  return true;
}

Order power_order(size_t n) {
  Order o;
  o.rows.assign(n, PolyVec(n));
  for (size_t i = 0; i < n; ++i) o.rows[i][i] = kOne;
  return o;
}

// Maximal at every D in targets, splitting targets on demand.
Order maximize(const FieldPtr& k, Order o, std::vector<Poly> targets, std::vector<Poly>& certified) {
  while (!targets.empty()) {
    Poly d = std::move(targets.back());
    targets.pop_back();
    try {
      while (enlarge_at(k, o, d)) {
      }
      certified.push_back(d);
    } catch (const SplitFound& s) {
      targets.push_back(s.factor.monic());
      targets.push_back(div_exact(d, s.factor).monic());
    }
  }
  std::sort(certified.begin(), certified.end(), [](const Poly& a, const Poly& b) { return to_string(a) < to_string(b); });
  return o;
}

std::vector<Poly> targets_of(const Poly& disc) {
  if (disc.is_zero()) throw DegenerateInput("relation is not squarefree (zero discriminant)");
  std::vector<Poly> t;
  for (auto& [fac, mult] : squarefree_factor(disc))
    if (mult >= 2 && fac.degree() > 0) t.push_back(fac);
  return t;
}

}  // namespace

std::vector<std::vector<Poly>> hermite_lower(std::vector<std::vector<Poly>> rows, size_t n) {
  auto is_zero_row = [](const PolyVec& r) { return std::all_of(r.begin(), r.end(), [](const Poly& e) { return e.is_zero(); }); };
  std::erase_if(rows, is_zero_row);
  PolyMat out(n);
  for (size_t j = n; j-- > 0;) {
    for (;;) {
      size_t best = rows.size();
      int count = 0;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][j].is_zero()) continue;
        ++count;
        if (best == rows.size() || rows[r][j].degree() < rows[best][j].degree()) best = r;
      }
      if (count == 0) throw InternalContractViolation("module has rank below the field degree");
      if (count == 1) {
        out[j] = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][j].is_zero()) continue;
        Poly q = rows[r][j] / rows[best][j];
        for (size_t c = 0; c <= j; ++c)
          if (!rows[best][c].is_zero()) rows[r][c] -= q * rows[best][c];
      }
      std::erase_if(rows, is_zero_row);
    }
  }
  for (size_t i = 0; i < n; ++i) {
    Rational s = 1 / out[i][i].lc();
    for (auto& e : out[i]) e *= s;
    for (size_t j = i; j-- > 0;) {
      if (out[i][j].degree() < out[j][j].degree()) continue;
      Poly q = out[i][j] / out[j][j];
      for (size_t c = 0; c <= j; ++c) out[i][c] -= q * out[j][c];
    }
  }
  return out;
}

MonicTransform make_monic(const BivariatePoly& p) {
  const int n = p.degy();
  if (n < 1) throw DegenerateInput("relation has degree 0 in y");
  Poly lc = p.y_coeff(n);
  std::map<BivariatePoly::Key, Integer> c;
  Poly lpow = kOne;
  for (int j = n; j >= 0; --j) {
    Poly cj = j == n ? kOne : p.y_coeff(j) * lpow;
    if (j < n) lpow = lpow * lc;
    for (int i = 0; i <= cj.degree(); ++i)
      if (cj[static_cast<size_t>(i)] != 0) c[{i, j}] = cj[static_cast<size_t>(i)].get_num();
  }
  return {BivariatePoly(std::move(c)), lc};
}

std::vector<std::pair<Poly, int>> squarefree_factor(const Poly& d) {
  if (d.is_zero()) throw EvaluationError("squarefree factorization of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly a = d.monic();
  if (a.degree() == 0) return out;
  Poly da = a.derivative();
  Poly b = gcd(a, da);
  Poly c = div_exact(a, b);
  Poly e = div_exact(da, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    Poly g = gcd(c, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    c = div_exact(c, g);
    e = div_exact(e, g) - c.derivative();
  }
  return out;
}

Poly discriminant(const BivariatePoly& p) { return FunctionField::make(p)->discriminant(); }

IntegralBasis enlarge_to_maximal(const FieldPtr& k, const std::vector<FieldElement>& start) {
  const size_t n = static_cast<size_t>(k->degree());
  if (start.size() != n) throw DegenerateInput("order basis needs exactly n elements");
  Poly den = kOne;
  for (const auto& e : start) den = lcm(den, e.denominator()).monic();
  PolyMat gens;
  for (const auto& e : start) {
    PolyVec row = e.numerators();
    Poly s = div_exact(den, e.denominator());
    for (auto& c : row) c = c * s;
    gens.push_back(std::move(row));
  }
  IntegralBasis out;
  out.kind = IntegralBasis::Kind::global;
  Order o = maximize(k, make_order(std::move(gens), den, n), targets_of(k->discriminant()), out.certified_at);
  for (size_t i = 0; i < n; ++i) out.elems.push_back(element(k, o.rows[i], o.den));
  return out;
}

IntegralBasis integral_basis(const FieldPtr& k) {
  const size_t n = static_cast<size_t>(k->degree());
  IntegralBasis out;
  out.kind = IntegralBasis::Kind::global;
  Order o = maximize(k, power_order(n), targets_of(k->discriminant()), out.certified_at);
  for (size_t i = 0; i < n; ++i) out.elems.push_back(element(k, o.rows[i], o.den));
  return out;
}

IntegralBasis infinity_basis(const FieldPtr& k) {
  const int n = k->degree();
  // x = 1/xt, y = yh * x^w with w making the transformed relation integral at xt = 0.
  int w = 0;
  for (int j = 0; j < n; ++j) {
    const int dj = k->coeffs()[static_cast<size_t>(j)].degree();
    if (dj > 0) w = std::max(w, (dj + (n - j) - 1) / (n - j));
  }
  std::vector<Poly> ah;
  for (int j = 0; j < n; ++j) ah.push_back(reversed(k->coeffs()[static_cast<size_t>(j)], w * (n - j)));
  auto kh = FunctionField::make(std::move(ah));

  IntegralBasis out;
  out.kind = IntegralBasis::Kind::at_infinity;
  const Poly disc = kh->discriminant();
  if (disc.is_zero()) throw DegenerateInput("relation is not squarefree (zero discriminant)");
  int order_at_zero = 0;
  while (disc.coeff(order_at_zero) == 0) ++order_at_zero;
  std::vector<Poly> targets;
  if (order_at_zero >= 2) targets.push_back(Poly::x());
  Order o = maximize(kh, power_order(static_cast<size_t>(n)), targets, out.certified_at);

  const RatFunc xinv = RatFunc(1) / RatFunc::x();
  for (int i = 0; i < n; ++i) {
    std::vector<RatFunc> c(static_cast<size_t>(n));
    RatFunc ypow(1);
    for (int j = 0; j < n; ++j) {
      c[static_cast<size_t>(j)] = RatFunc(o.rows[static_cast<size_t>(i)][static_cast<size_t>(j)], o.den).at_reciprocal() * ypow;
      for (int r = 0; r < w; ++r) ypow *= xinv;
    }
    out.elems.emplace_back(k, c);
  }
  return out;
}

IntegralBasis integral_basis(const BivariatePoly& p) {
  if (!p.is_monic_in_y()) throw DegenerateInput("relation is not monic in y; apply make_monic first");
  return integral_basis(FunctionField::make(p));
}

IntegralBasis infinity_basis(const BivariatePoly& p) {
  if (!p.is_monic_in_y()) throw DegenerateInput("relation is not monic in y; apply make_monic first");
  return infinity_basis(FunctionField::make(p));
}

std::string to_text(const IntegralBasis& b) {
  std::string s = b.kind == IntegralBasis::Kind::global ? "global\n" : "at_infinity\n";
  for (const auto& e : b.elems) s += "\n" + to_text(e);
  return s;
}

IntegralBasis parse_integral_basis(const FieldPtr& k, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  IntegralBasis b;
  if (!std::getline(in, line)) throw ParseError("empty integral basis", 1, 1);
  if (line == "global")
    b.kind = IntegralBasis::Kind::global;
  else if (line == "at_infinity")
    b.kind = IntegralBasis::Kind::at_infinity;
  else
    throw ParseError("unknown basis kind '" + line + "'", 1, 1);
  std::string block;
  int lineno = 1;
  auto flush = [&] {
    if (block.empty()) return;
    b.elems.push_back(parse_field_element(k, block));
    block.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      flush();
    else
      block += line + "\n";
  }
  flush();
  if (static_cast<int>(b.elems.size()) != k->degree()) throw ParseError("expected " + std::to_string(k->degree()) + " basis elements", lineno, 1);
  return b;
}

}  // namespace ocb
