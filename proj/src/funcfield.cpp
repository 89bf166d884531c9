#include "ocb/funcfield.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <functional>
#include <sstream>

#include "ocb/errors.hpp"

namespace ocb {

namespace {

const Poly& one_poly() {
  static const Poly p = Poly::constant(Rational(1));
  return p;
}

Poly poly_div_exact(const Poly& a, const Poly& b) { return div_exact(a, b); }

std::string hex_hash(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(s));
  return buf;
}

}  // namespace

FieldPtr FunctionField::make(const BivariatePoly& p) {
  if (p.is_zero()) throw DegenerateInput("zero relation");
  if (!p.is_monic_in_y()) throw DegenerateInput("relation is not monic in y");
  const int n = p.degy();
  if (n < 1) throw DegenerateInput("relation has degree 0 in y");
  std::vector<Poly> a;
  for (int j = 0; j < n; ++j) a.push_back(p.y_coeff(j));
  return make(std::move(a));
}

FieldPtr FunctionField::make(std::vector<Poly> lower_coeffs) {
  if (lower_coeffs.empty()) throw DegenerateInput("field extension of degree 0");
  return FieldPtr(new FunctionField(std::move(lower_coeffs)));
}

FunctionField::FunctionField(std::vector<Poly> a) : a_(std::move(a)) {
  const int n = degree();
  const int top = 2 * n - 1;
  powers_.resize(static_cast<size_t>(top));
  for (int k = 0; k < top; ++k) {
    auto& v = powers_[static_cast<size_t>(k)];
    v.assign(static_cast<size_t>(n), Poly());
    if (k < n) {
      v[static_cast<size_t>(k)] = one_poly();
      continue;
    }
    const auto& prev = powers_[static_cast<size_t>(k - 1)];
    const Poly lead = prev[static_cast<size_t>(n - 1)];
    for (int j = n - 1; j >= 1; --j) v[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
    v[0] = Poly();
    if (!lead.is_zero())
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] -= lead * a_[static_cast<size_t>(j)];
  }

  // Newton's identities for the monic polynomial y^n + sum a_j y^j.
  power_sums_.resize(static_cast<size_t>(top));
  power_sums_[0] = Poly::constant(Rational(n));
  for (int k = 1; k < top; ++k) {
    Poly s;
    if (k <= n) s -= a_[static_cast<size_t>(n - k)] * Rational(k);
    for (int i = 1; i <= std::min(k - 1, n); ++i) s -= a_[static_cast<size_t>(n - i)] * power_sums_[static_cast<size_t>(k - i)];
    power_sums_[static_cast<size_t>(k)] = std::move(s);
  }

  std::string canon;
  for (int j = 0; j < n; ++j) canon += to_string(a_[static_cast<size_t>(j)]) + ";";
  fingerprint_ = std::to_string(n) + ":" + hex_hash(canon);
}

Poly FunctionField::discriminant() const {
  const int n = degree();
  Matrix<Poly> t(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(static_cast<size_t>(i), static_cast<size_t>(j)) = power_sums_[static_cast<size_t>(i + j)];
  return bareiss_det(std::move(t), poly_div_exact);
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldPtr field, const std::vector<RatFunc>& coords) : field_(std::move(field)) {
  if (!field_) throw InternalContractViolation("field element without a field");
  if (static_cast<int>(coords.size()) != field_->degree()) throw InternalContractViolation("coordinate count does not match the field degree");
  Poly d = one_poly();
  for (const auto& c : coords) d = lcm(d, c.den());
  nums_.reserve(coords.size());
  for (const auto& c : coords) nums_.push_back(c.num() * div_exact(d, c.den()));
  den_ = std::move(d);
  normalize();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Poly> nums, Poly den) : field_(std::move(field)), nums_(std::move(nums)), den_(std::move(den)) {
  if (!field_) throw InternalContractViolation("field element without a field");
  if (static_cast<int>(nums_.size()) != field_->degree()) throw InternalContractViolation("coordinate count does not match the field degree");
  if (den_.is_zero()) throw EvaluationError("field element with zero denominator");
  normalize();
}

FieldElement FieldElement::zero(FieldPtr field) {
  const int n = field->degree();
  return FieldElement(std::move(field), std::vector<Poly>(static_cast<size_t>(n)), one_poly());
}

FieldElement FieldElement::constant(FieldPtr field, const RatFunc& c) {
  std::vector<Poly> nums(static_cast<size_t>(field->degree()));
  nums[0] = c.num();
  return FieldElement(std::move(field), std::move(nums), c.den());
}

FieldElement FieldElement::y(FieldPtr field) {
  std::vector<Poly> nums(static_cast<size_t>(field->degree()));
  if (field->degree() == 1)
    nums[0] = -field->coeffs()[0];
  else
    nums[1] = one_poly();
  return FieldElement(std::move(field), std::move(nums), one_poly());
}

void FieldElement::normalize() {
  bool all_zero = std::all_of(nums_.begin(), nums_.end(), [](const Poly& p) { return p.is_zero(); });
  if (all_zero) {
    den_ = one_poly();
    return;
  }
  Poly g = den_;
  for (const auto& p : nums_) {
    if (g.degree() == 0) break;
    if (!p.is_zero()) g = gcd(g, p);
  }
  if (g.degree() > 0) {
    den_ = div_exact(den_, g);
    for (auto& p : nums_) p = div_exact(p, g);
  }
  if (den_.lc() != 1) {
    Rational s = 1 / den_.lc();
    den_ *= s;
    for (auto& p : nums_) p *= s;
  }
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_) throw InternalContractViolation("field element without a field");
  if (field_ != o.field_ && field_->fingerprint() != o.field_->fingerprint())
    throw InternalContractViolation("field elements belong to different fields");
}

RatFunc FieldElement::coord(int j) const { return RatFunc(nums_[static_cast<size_t>(j)], den_); }

std::vector<RatFunc> FieldElement::coords() const {
  std::vector<RatFunc> r;
  for (int j = 0; j < degree(); ++j) r.push_back(coord(j));
  return r;
}

bool FieldElement::is_zero() const {
  return std::all_of(nums_.begin(), nums_.end(), [](const Poly& p) { return p.is_zero(); });
}

int FieldElement::y_degree() const {
  for (int j = degree() - 1; j >= 0; --j)
    if (!nums_[static_cast<size_t>(j)].is_zero()) return j;
  return -1;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& p : r.nums_) p = -p;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  if (den_ == o.den_) {
    for (size_t j = 0; j < nums_.size(); ++j) nums_[j] += o.nums_[j];
  } else {
    Poly g = gcd(den_, o.den_);
    Poly ma = div_exact(o.den_, g), mb = div_exact(den_, g);
    for (size_t j = 0; j < nums_.size(); ++j) nums_[j] = nums_[j] * ma + o.nums_[j] * mb;
    den_ = den_ * ma;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const int n = degree();
  std::vector<Poly> prod(static_cast<size_t>(2 * n - 1));
  for (int i = 0; i < n; ++i) {
    if (nums_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (o.nums_[static_cast<size_t>(j)].is_zero()) continue;
      prod[static_cast<size_t>(i + j)] += nums_[static_cast<size_t>(i)] * o.nums_[static_cast<size_t>(j)];
    }
  }
  std::vector<Poly> r(prod.begin(), prod.begin() + n);
  for (int k = n; k < 2 * n - 1; ++k) {
    const Poly& c = prod[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    const auto& red = field_->reduced_power(k);
    for (int j = 0; j < n; ++j)
      if (!red[static_cast<size_t>(j)].is_zero()) r[static_cast<size_t>(j)] += c * red[static_cast<size_t>(j)];
  }
  nums_ = std::move(r);
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator*=(const RatFunc& s) {
  for (auto& p : nums_) p *= s.num();
  den_ = den_ * s.den();
  normalize();
  return *this;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * ff_inv(b); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  return a.nums_ == b.nums_ && a.den_ == b.den_;
}

namespace {

// Coordinates (over Q[x]) of N * y^i where N has polynomial coordinates.
std::vector<std::vector<Poly>> poly_mult_rows(const FieldElement& a) {
  const auto& field = a.field();
  const int n = field->degree();
  std::vector<std::vector<Poly>> rows;
  std::vector<Poly> cur = a.numerators();
  for (int i = 0; i < n; ++i) {
    rows.push_back(cur);
    Poly lead = cur[static_cast<size_t>(n - 1)];
    for (int j = n - 1; j >= 1; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
    cur[0] = Poly();
    if (!lead.is_zero())
      for (int j = 0; j < n; ++j) cur[static_cast<size_t>(j)] -= lead * field->coeffs()[static_cast<size_t>(j)];
  }
  return rows;
}

}  // namespace

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement ff_inv(const FieldElement& a) {
  if (a.is_zero()) throw EvaluationError("inverse of zero in the function field");
  const auto& field = a.field();
  const size_t n = static_cast<size_t>(field->degree());
  // The cofactor s with s*A == 1 mod p solves sum_i s_i (A y^i) = 1; this is
  // the extended gcd written as a linear system over Q(x), eliminated
  // fraction-free (Bareiss) over Q[x] and back-substituted over Q(x).
  auto rows = poly_mult_rows(a);
  Matrix<Poly> m(n, n + 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(j, i) = rows[i][j];
  m(0, n) = one_poly();
  Poly prev = one_poly();
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) throw DegenerateInput("relation is reducible: element is a zero divisor");
    m.swap_rows(p, k);
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j <= n; ++j) m(i, j) = div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = Poly();
    }
    prev = m(k, k);
  }
  std::vector<RatFunc> s(n);
  for (size_t i = n; i-- > 0;) {
    RatFunc acc(m(i, n));
    for (size_t j = i + 1; j < n; ++j)
      if (!m(i, j).is_zero()) acc -= RatFunc(m(i, j)) * s[j];
    s[i] = acc / RatFunc(m(i, i));
  }
  for (auto& c : s) c *= RatFunc(a.denominator());
  return FieldElement(field, s);
}


Matrix<RatFunc> multiplication_matrix(const FieldElement& a) {
  const int n = a.degree();
  auto rows = poly_mult_rows(a);
  Matrix<RatFunc> m(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(static_cast<size_t>(i), static_cast<size_t>(j)) = RatFunc(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], a.denominator());
  return m;
}

RatFunc trace(const FieldElement& a) {
  Poly s;
  for (int j = 0; j < a.degree(); ++j) {
    const Poly& c = a.numerators()[static_cast<size_t>(j)];
    if (!c.is_zero()) s += c * a.field()->power_sum(j);
  }
  return RatFunc(s, a.denominator());
}

namespace {

using ZPoly = std::vector<Integer>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

void zadd(ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

}  // namespace

UPoly<RatFunc> charpoly(const FieldElement& a) {
  const size_t n = static_cast<size_t>(a.degree());
  auto rows = poly_mult_rows(a);
  // Integer matrix A = s * N, so that a = A / (s * den).
  Integer s = 1;
  for (const auto& r : rows)
    for (const auto& e : r)
      for (const auto& c : e.coeffs()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::vector<ZPoly>> A(n, std::vector<ZPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& c : rows[i][j].coeffs()) A[i][j].push_back(Rational(c * s).get_num());

  // Faddeev-LeVerrier over Z[x]; the divisions by k are exact.
  std::vector<ZPoly> C(n + 1);
  C[n] = {Integer(1)};
  std::vector<std::vector<ZPoly>> M(n, std::vector<ZPoly>(n));
  for (size_t k = 1; k <= n; ++k) {
    for (size_t i = 0; i < n; ++i) zadd(M[i][i], C[n - k + 1]);
    std::vector<std::vector<ZPoly>> AM(n, std::vector<ZPoly>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) {
        if (A[i][l].empty()) continue;
        for (size_t j = 0; j < n; ++j)
          if (!M[l][j].empty()) zadd(AM[i][j], zmul(A[i][l], M[l][j]));
      }
    ZPoly tr;
    for (size_t i = 0; i < n; ++i) zadd(tr, AM[i][i]);
    for (auto& c : tr) {
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
      c = -c;
    }
    C[n - k] = std::move(tr);
    M = std::move(AM);
  }
  // chi_a(X) = D^-n chi_A(D X) with D = s * den.
  const Poly d = a.denominator() * Rational(s);
  std::vector<RatFunc> c(n + 1);
  Poly dpow = one_poly();
  for (size_t k = n + 1; k-- > 0;) {
    std::vector<Rational> co(C[k].begin(), C[k].end());
    c[k] = RatFunc(Poly(std::move(co)), dpow);
    dpow = dpow * d;
  }
  return UPoly<RatFunc>(std::move(c));
}

bool is_integral(const FieldElement& a) {
  if (a.denominator().degree() == 0) return true;
  auto cp = charpoly(a);
  for (const auto& c : cp.coeffs())
    if (!c.is_polynomial()) return false;
  return true;
}

bool is_integral_at_infinity(const FieldElement& a) {
  auto cp = charpoly(a);
  for (const auto& c : cp.coeffs())
    if (!c.is_zero() && c.degree() > 0) return false;
  return true;
}

Matrix<RatFunc> trace_matrix(const std::vector<FieldElement>& basis) {
  const size_t n = basis.size();
  Matrix<RatFunc> t(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      t(i, j) = trace(basis[i] * basis[j]);
      t(j, i) = t(i, j);
    }
  return t;
}

std::string to_text(const FieldElement& a) {
  std::string s;
  for (int j = 0; j < a.degree(); ++j) s += to_string(a.coord(j)) + "\n";
  return s;
}

FieldElement parse_field_element(const FieldPtr& field, std::string_view text) {
  std::vector<RatFunc> c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      c.push_back(parse_ratfunc(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  if (static_cast<int>(c.size()) != field->degree())
    throw ParseError("expected " + std::to_string(field->degree()) + " coordinates, found " + std::to_string(c.size()), lineno, 1);
  return FieldElement(field, c);
}

std::string to_display_string(const FieldElement& a) {
  std::string num;
  for (int j = a.degree() - 1; j >= 0; --j) {
    const Poly& c = a.numerators()[static_cast<size_t>(j)];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    std::string ys = j == 0 ? "" : (j == 1 ? "y" : "y^" + std::to_string(j));
    int terms = 0;
    for (const auto& v : c.coeffs()) terms += v != 0;
    std::string term;
    if (ys.empty())
      term = cs;
    else if (cs == "1")
      term = ys;
    else if (cs == "-1")
      term = "-" + ys;
    else if (terms == 1)
      term = cs + "*" + ys;
    else
      term = "(" + cs + ")*" + ys;
    if (num.empty())
      num = term;
    else if (term[0] == '-')
      num += " - " + term.substr(1);
    else
      num += " + " + term;
  }
  if (num.empty()) return "0";
  if (a.denominator().degree() == 0) return num;
  return "(" + num + ") / (" + to_string(a.denominator()) + ")";
}

// ---- Generators and q-expansions ----

Generators::Generators(Recipe t, Recipe f) : t_recipe_(std::move(t)), f_recipe_(std::move(f)) {
  if (!t_recipe_ || !f_recipe_) throw InternalContractViolation("missing generator recipe");
}

Generators::Generators(LaurentSeries ts, LaurentSeries fs) : ts_(std::move(ts)), fs_(std::move(fs)), have_(true) {}

std::pair<LaurentSeries, LaurentSeries> Generators::at(int trunc) const {
  std::lock_guard lock(mu_);
  if (!growable()) {
    if (ts_.trunc() < trunc || fs_.trunc() < trunc)
      throw PrecisionError("generator expansions are known only to O(q^" + std::to_string(std::min(ts_.trunc(), fs_.trunc())) + "), O(q^" +
                           std::to_string(trunc) + ") needed");
    return {ts_, fs_};
  }
  if (!have_ || ts_.trunc() < trunc) ts_ = evaluate_recipe(t_recipe_, trunc);
  if (!have_ || fs_.trunc() < trunc) fs_ = evaluate_recipe(f_recipe_, trunc);
  have_ = true;
  return {ts_, fs_};
}

namespace {

LaurentSeries poly_at(const Poly& p, const std::vector<LaurentSeries>& pw) {
  LaurentSeries acc = LaurentSeries::zero(INT_MAX / 4);
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p[static_cast<size_t>(i)];
    if (c == 0) continue;
    acc += pw[static_cast<size_t>(i)] * c;
  }
  return acc;
}

}  // namespace

LaurentSeries to_qseries(const FieldElement& a, const LaurentSeries& ts, const LaurentSeries& fs) {
  const int n = a.degree();
  if (a.is_zero()) return LaurentSeries::zero(std::min(ts.trunc(), fs.trunc()));
  int maxdeg = a.denominator().degree();
  for (const auto& p : a.numerators()) maxdeg = std::max(maxdeg, p.degree());
  std::vector<LaurentSeries> pw;
  pw.push_back(LaurentSeries::constant(Rational(1), std::max(ts.trunc(), fs.trunc())));
  for (int i = 1; i <= maxdeg; ++i) pw.push_back(pw.back() * ts);

  LaurentSeries acc;
  bool have = false;
  for (int j = n - 1; j >= 0; --j) {
    if (have) acc = acc * fs;
    const Poly& c = a.numerators()[static_cast<size_t>(j)];
    if (c.is_zero()) continue;
    LaurentSeries cj = poly_at(c, pw);
    acc = have ? acc + cj : cj;
    have = true;
  }
  if (a.denominator().degree() == 0) return acc * (1 / a.denominator().lc());
  LaurentSeries den = poly_at(a.denominator(), pw);
  if (den.is_zero()) throw PrecisionError("denominator vanishes to the available precision");
  return series_div(acc, den);
}

LaurentSeries to_qseries(const FieldElement& a, const Generators& gens, int trunc) {
  int work = trunc + 8;
  for (int attempt = 0; attempt < 32; ++attempt) {
    auto [ts, fs] = gens.at(work);
    LaurentSeries r = to_qseries(a, ts, fs);
    if (r.trunc() >= trunc) return r.truncated(trunc);
    if (!gens.growable()) throw PrecisionError("q-expansion reaches only O(q^" + std::to_string(r.trunc()) + "), O(q^" + std::to_string(trunc) + ") needed");
    work += (trunc - r.trunc()) + 8;
  }
  throw PrecisionError("could not reach O(q^" + std::to_string(trunc) + ") for a q-expansion");
}

}  // namespace ocb
