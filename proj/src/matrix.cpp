// Copyright 2026 The gfft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gfft/matrix.hpp"

#include <utility>

namespace gfft {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const Elem inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Elem f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

std::vector<Elem> Matrix::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw Error(Errc::LengthMismatch, "matrix-vector size mismatch");
  std::vector<Elem> out(rows_, field_->zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = field_->zero();
    for (std::size_t j = 0; j < cols_; ++j) acc = acc + (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::LengthMismatch, "matrix product size mismatch");
  Matrix out(*a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem f = a(i, k);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + f * b(k, j);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix inverse(const Matrix& m, Errc err) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::InvalidArgument, "inverse of a non-square matrix");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(err, "matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::vector<Elem> solve(const Matrix& m, const std::vector<Elem>& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw Error(Errc::LengthMismatch, "solve size mismatch");
  Matrix aug(m.field(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Errc::SingularMatrix, "matrix is singular");
  std::vector<Elem> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::vector<std::vector<Elem>> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto piv = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gfft
