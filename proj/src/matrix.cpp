#include "ocb/matrix.hpp"

#include <algorithm>

namespace ocb {

namespace {

using ZRow = std::vector<Integer>;

void remove_content(ZRow& row) {
  Integer g = 0;
  for (const auto& c : row) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& c : row)
    if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZRow integer_row(const QMatrix& m, size_t r) {
  Integer l = 1;
  for (size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
  ZRow row(m.cols());
  for (size_t c = 0; c < m.cols(); ++c) {
    const Rational& v = m(r, c);
    if (sgn(v) == 0) continue;
    row[c] = v.get_num() * (l / v.get_den());
  }
  remove_content(row);
  return row;
}

}  // namespace

RrefResult rref(const QMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<ZRow> a(rows);
  for (size_t r = 0; r < rows; ++r) a[r] = integer_row(m, r);

  std::vector<size_t> pivots;
  size_t cur = 0;
  Integer f, g;
  for (size_t c = 0; c < cols && cur < rows; ++c) {
    size_t p = cur;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[cur]);
    const ZRow& prow = a[cur];
    for (size_t r = 0; r < rows; ++r) {
      if (r == cur || a[r][c] == 0) continue;
      // row_r <- (piv/g) * row_r - (a_rc/g) * row_piv
      mpz_gcd(g.get_mpz_t(), prow[c].get_mpz_t(), a[r][c].get_mpz_t());
      Integer s = prow[c] / g;
      f = a[r][c] / g;
      ZRow& row = a[r];
      for (size_t j = 0; j < cols; ++j) {
        if (row[j] != 0) row[j] *= s;
        if (prow[j] != 0) row[j] -= f * prow[j];
      }
      remove_content(row);
    }
    pivots.push_back(c);
    ++cur;
  }

  QMatrix out(rows, cols);
  for (size_t r = 0; r < pivots.size(); ++r) {
    const Integer& piv = a[r][pivots[r]];
    for (size_t c = 0; c < cols; ++c) {
      if (a[r][c] == 0) continue;
      Rational v(a[r][c], piv);
      v.canonicalize();
      out(r, c) = v;
    }
  }
  return {std::move(out), std::move(pivots)};
}

std::vector<QVector> nullspace(const QMatrix& m) {
  RrefResult rr = rref(m);
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.matrix(r, free);
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    Rational s = 1 / *first;
    for (auto& x : v) x *= s;
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  if (v.size() != m.cols()) throw InternalContractViolation("matrix/vector dimension mismatch");
  QVector r(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace ocb
