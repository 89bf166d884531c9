#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ocb/errors.hpp"
#include "ocb/rational.hpp"

namespace ocb {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  explicit Matrix(const std::vector<std::vector<T>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InternalContractViolation("ragged matrix rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  std::vector<T> row(size_t r) const { return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_), a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)}; }
  void swap_rows(size_t r1, size_t r2) {
    if (r1 == r2) return;
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InternalContractViolation("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_; }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

struct RrefResult {
  QMatrix matrix;
  std::vector<size_t> pivots;  // strictly increasing
};

// Reduced row echelon form over Q. Elimination runs on integer rows (cleared
// denominators, content removed after each update); the pivot for a column is
// the first nonzero entry at or below the current row.
RrefResult rref(const QMatrix& m);

// Right nullspace basis; each vector's first nonzero entry is 1.
std::vector<QVector> nullspace(const QMatrix& m);

QVector mat_vec(const QMatrix& m, const QVector& v);

// Gauss-Jordan over an exact field T. Returns std::nullopt if singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const size_t n = m.rows();
  if (m.cols() != n) throw InternalContractViolation("inverse of a non-square matrix");
  Matrix<T> a = m, inv = Matrix<T>::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    T s = T(1) / a(c, c);
    for (size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      T f = a(r, c);
      for (size_t j = 0; j < n; ++j) {
        if (!is_zero(a(c, j))) a(r, j) -= f * a(c, j);
        if (!is_zero(inv(c, j))) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Fraction-free determinant (Bareiss) over an integral domain with exact
// division. Div(a, b) must return a/b.
template <class T, class Div>
T bareiss_det(Matrix<T> a, Div div) {
  const size_t n = a.rows();
  if (n == 0) return T(1);
  T prev = T(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return T();
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a(i, j) = div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

}  // namespace ocb
