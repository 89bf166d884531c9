#include "ocb/normalize.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "ocb/errors.hpp"

namespace ocb {

namespace {

// Coordinates of elements with respect to a Q(x)-basis.
class Coordinates {
 public:
  explicit Coordinates(const std::vector<FieldElement>& basis) {
    const size_t n = basis.size();
    Matrix<RatFunc> m(n, n);
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) m(k, j) = basis[k].coord(static_cast<int>(j));
    auto inv = inverse(m);
    if (!inv) throw InternalContractViolation("basis at infinity is singular");
    inv_ = std::move(*inv);
  }

  std::vector<RatFunc> of(const FieldElement& z) const {
    const size_t n = inv_.rows();
    std::vector<RatFunc> r(n);
    for (size_t j = 0; j < n; ++j) {
      RatFunc c = z.coord(static_cast<int>(j));
      if (c.is_zero()) continue;
      for (size_t k = 0; k < n; ++k)
        if (!inv_(j, k).is_zero()) r[k] += c * inv_(j, k);
    }
    return r;
  }

 private:
  Matrix<RatFunc> inv_;
};

CoordMatrix from_coords(const std::vector<std::vector<RatFunc>>& r) {
  CoordMatrix c;
  c.den = Poly::constant(Rational(1));
  for (const auto& row : r)
    for (const auto& e : row)
      if (!e.is_zero()) c.den = lcm(c.den, e.den());
  c.den = c.den.monic();
  for (const auto& row : r) {
    std::vector<Poly> out;
    for (const auto& e : row) out.push_back(e.is_zero() ? Poly() : e.num() * div_exact(c.den, e.den()));
    c.a.push_back(std::move(out));
  }
  return c;
}

Poly x_power(int k) { return Poly::constant(Rational(1)).shifted(k); }

}  // namespace

CoordMatrix coord_matrix(const std::vector<FieldElement>& b, const IntegralBasis& at_inf) {
  Coordinates co(at_inf.elems);
  std::vector<std::vector<RatFunc>> r;
  for (const auto& e : b) r.push_back(co.of(e));
  return from_coords(r);
}

std::vector<std::vector<Rational>> leading_vectors(const CoordMatrix& c, std::vector<int>& d) {
  const size_t n = c.a.size();
  std::vector<std::vector<Rational>> v(n);
  d.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    int m = INT_MIN;
    for (const auto& e : c.a[i])
      if (!e.is_zero()) m = std::max(m, e.degree());
    if (m == INT_MIN) throw InternalContractViolation("zero element in a basis");
    d[i] = m - c.den.degree();
    for (const auto& e : c.a[i]) v[i].push_back(e.coeff(m));
  }
  return v;
}

NormalizedBasis normalize_at_infinity(const IntegralBasis& global, const IntegralBasis& at_inf) {
  const size_t n = global.elems.size();
  if (at_inf.elems.size() != n) throw InternalContractViolation("bases of different size");
  Coordinates co(at_inf.elems);
  NormalizedBasis nb;
  nb.b = global.elems;
  nb.transform.assign(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i) nb.transform[i][i] = Poly::constant(Rational(1));
  std::vector<std::vector<RatFunc>> r;
  for (const auto& e : nb.b) r.push_back(co.of(e));
  for (;;) {
    auto v = leading_vectors(from_coords(r), nb.d);
    // Dependencies sum_i c_i V_i = 0 form the nullspace of the transpose.
    QMatrix vt(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) vt(j, i) = v[i][j];
    auto ns = nullspace(vt);
    if (ns.empty()) break;
    const QVector& c = ns.front();
    size_t i = n;
    for (size_t k = 0; k < n; ++k)
      if (c[k] != 0 && (i == n || nb.d[k] > nb.d[i])) i = k;
    FieldElement nbi = FieldElement::zero(nb.b[i].field());
    std::vector<RatFunc> nri(n);
    std::vector<Poly> nti(n);
    for (size_t k = 0; k < n; ++k) {
      if (c[k] == 0) continue;
      const Poly s = x_power(nb.d[i] - nb.d[k]) * Poly::constant(c[k]);
      nbi += nb.b[k] * RatFunc(s);
      for (size_t j = 0; j < n; ++j) {
        if (!r[k][j].is_zero()) nri[j] += RatFunc(s) * r[k][j];
        if (!nb.transform[k][j].is_zero()) nti[j] += s * nb.transform[k][j];
      }
    }
    nb.b[i] = std::move(nbi);
    r[i] = std::move(nri);
    nb.transform[i] = std::move(nti);
  }
  return nb;
}

int minimal_d(const FieldElement& elem, const IntegralBasis& at_inf) {
  if (elem.is_zero()) throw InternalContractViolation("minimal_d of zero");
  int d = INT_MIN;
  for (const auto& s : Coordinates(at_inf.elems).of(elem))
    if (!s.is_zero()) d = std::max(d, s.degree());
  return d;
}

std::string to_text(const NormalizedBasis& nb) {
  std::ostringstream os;
  os << "d";
  for (int x : nb.d) os << ' ' << x;
  os << '\n';
  for (const auto& e : nb.b) os << '\n' << to_text(e);
  return os.str();
}

}  // namespace ocb
