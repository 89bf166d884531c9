#include "ocb/residue.hpp"

#include <map>
#include <string>

#include "ocb/errors.hpp"
#include "ocb/modular.hpp"

namespace ocb {

namespace {

using modp::u64;
using modp::Vec;
using PolyMat = std::vector<std::vector<Poly>>;

bool reduce_poly(const Poly& a, u64 p, Vec& out) {
  out.assign(a.coeffs().size(), 0);
  for (size_t i = 0; i < out.size(); ++i)
    if (!modp::reduce(a.coeffs()[i], p, out[i])) return false;
  modp::trim(out);
  return true;
}

struct Image {
  bool split = false;
  std::vector<size_t> pivots;
  // Split: low coefficients of the monic factor. Kernel: coefficients of the
  // non-free entries of every kernel vector, deg D slots each.
  std::vector<u64> data;
  int split_degree = 0;

  std::string signature() const {
    std::string s = split ? "s" + std::to_string(split_degree) : "k";
    for (size_t c : pivots) s += "," + std::to_string(c);
    return s;
  }
};

// Gauss-Jordan over F_p[x]/(D_p); false if some entry cannot be reduced.
bool image_mod(const PolyMat& a, size_t cols, const Poly& d, u64 p, Image& img) {
  Vec dp;
  if (!reduce_poly(d, p, dp)) return false;
  const size_t m = dp.size() - 1;
  std::vector<std::vector<Vec>> r(a.size(), std::vector<Vec>(cols));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (!reduce_poly(a[i][j], p, r[i][j])) return false;
      modp::rem_monic(r[i][j], dp, p);
    }
  auto mulmod = [&](const Vec& x, const Vec& y) {
    Vec z = modp::mul(x, y, p);
    modp::rem_monic(z, dp, p);
    return z;
  };
  size_t row = 0;
  for (size_t c = 0; c < cols && row < r.size(); ++c) {
    size_t piv = row;
    while (piv < r.size() && r[piv][c].empty()) ++piv;
    if (piv == r.size()) continue;
    std::swap(r[piv], r[row]);
    Vec inv;
    Vec g = modp::inverse_or_gcd(r[row][c], dp, p, inv);
    if (g.size() > 1) {
      img.split = true;
      img.split_degree = static_cast<int>(g.size()) - 1;
      img.pivots.push_back(c);
      img.data.assign(g.begin(), g.end() - 1);
      return true;
    }
    for (size_t j = c; j < cols; ++j) r[row][j] = mulmod(r[row][j], inv);
    for (size_t i = 0; i < r.size(); ++i) {
      if (i == row || r[i][c].empty()) continue;
      const Vec f = r[i][c];
      for (size_t j = c; j < cols; ++j) {
        if (r[row][j].empty()) continue;
        Vec t = mulmod(f, r[row][j]);
        Vec& e = r[i][j];
        if (e.size() < t.size()) e.resize(t.size(), 0);
        for (size_t k = 0; k < t.size(); ++k) e[k] = modp::sub(e[k], t[k], p);
        modp::trim(e);
      }
    }
    img.pivots.push_back(c);
    ++row;
  }
  for (size_t c = 0, k = 0; c < cols; ++c) {
    if (k < img.pivots.size() && img.pivots[k] == c) {
      ++k;
      continue;
    }
    for (size_t i = 0; i < img.pivots.size(); ++i)
      for (size_t s = 0; s < m; ++s) {
        const Vec& e = r[i][c];
        img.data.push_back(s < e.size() ? (p - e[s]) % p : 0);
      }
  }
  return true;
}

struct Accumulator {
  Integer modulus = 1;
  std::vector<Integer> values;
  bool have_candidate = false;
  std::vector<Rational> candidate;
};

bool reconstruct(const Accumulator& acc, std::vector<Rational>& out) {
  out.resize(acc.values.size());
  for (size_t i = 0; i < out.size(); ++i)
    if (!modp::rational_reconstruct(acc.values[i], acc.modulus, out[i])) return false;
  return true;
}

bool matches(const std::vector<Rational>& cand, const std::vector<u64>& data, u64 p) {
  for (size_t i = 0; i < cand.size(); ++i) {
    u64 v;
    if (!modp::reduce(cand[i], p, v) || v != data[i]) return false;
  }
  return true;
}

ResidueKernel assemble(const std::vector<Rational>& vals, const std::vector<size_t>& pivots, size_t cols, size_t m) {
  ResidueKernel k;
  size_t pos = 0;
  for (size_t c = 0, q = 0; c < cols; ++c) {
    if (q < pivots.size() && pivots[q] == c) {
      ++q;
      continue;
    }
    std::vector<Poly> v(cols);
    v[c] = Poly::constant(Rational(1));
    for (size_t piv : pivots) {
      std::vector<Rational> co(vals.begin() + static_cast<long>(pos), vals.begin() + static_cast<long>(pos + m));
      pos += m;
      v[piv] = Poly(std::move(co));
    }
    k.vecs.push_back(std::move(v));
    k.free.push_back(c);
  }
  return k;
}

bool annihilates(const PolyMat& a, size_t cols, const Poly& d, const ResidueKernel& k) {
  for (const auto& v : k.vecs)
    for (const auto& row : a) {
      Poly s;
      for (size_t j = 0; j < cols; ++j)
        if (!row[j].is_zero() && !v[j].is_zero()) s += row[j] * v[j];
      if (!(s % d).is_zero()) return false;
    }
  return true;
}

}  // namespace

ResidueKernel residue_kernel(const PolyMat& a, size_t cols, const Poly& d) {
  const size_t m = static_cast<size_t>(d.degree());
  std::map<std::string, Accumulator> accs;
  modp::PrimeSequence primes;
  for (int attempt = 0; attempt < 20000; ++attempt) {
    const u64 p = primes.next();
    Image img;
    if (!image_mod(a, cols, d, p, img)) continue;
    Accumulator& acc = accs[img.signature()];
    if (acc.have_candidate) {
      if (matches(acc.candidate, img.data, p)) {
        if (img.split) {
          std::vector<Rational> co = acc.candidate;
          co.push_back(Rational(1));
          Poly g(std::move(co));
          if (g.degree() > 0 && g.degree() < d.degree() && (d % g).is_zero()) throw SplitFound{g};
        } else {
          ResidueKernel k = assemble(acc.candidate, img.pivots, cols, m);
          if (annihilates(a, cols, d, k)) return k;
        }
      }
      acc.have_candidate = false;
    }
    if (acc.values.empty()) {
      acc.values.resize(img.data.size());
      for (size_t i = 0; i < img.data.size(); ++i) acc.values[i] = static_cast<unsigned long>(img.data[i]);
    } else {
      for (size_t i = 0; i < img.data.size(); ++i) modp::crt(acc.values[i], acc.modulus, img.data[i], p);
    }
    acc.modulus *= static_cast<unsigned long>(p);
    acc.have_candidate = reconstruct(acc, acc.candidate);
  }
  throw InternalContractViolation("residue kernel did not converge");
}

ResidueKernel residue_kernel_exact(PolyMat a, size_t cols, const Poly& d) {
  for (auto& row : a)
    for (auto& e : row) e = e % d;
  std::vector<size_t> pivcols;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    auto eg = ext_gcd(a[r][c], d);
    if (eg.g.degree() > 0) throw SplitFound{eg.g};
    const Poly inv = eg.s % d;
    for (size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] * inv) % d;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Poly f = a[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] = (a[i][j] - f * a[r][j]) % d;
    }
    pivcols.push_back(c);
    ++r;
  }
  ResidueKernel k;
  for (size_t c = 0, q = 0; c < cols; ++c) {
    if (q < pivcols.size() && pivcols[q] == c) {
      ++q;
      continue;
    }
    std::vector<Poly> v(cols);
    v[c] = Poly::constant(Rational(1));
    for (size_t i = 0; i < pivcols.size(); ++i) v[pivcols[i]] = -a[i][c];
    k.vecs.push_back(std::move(v));
    k.free.push_back(c);
  }
  return k;
}

}  // namespace ocb
