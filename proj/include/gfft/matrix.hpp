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

#pragma once

#include <optional>
#include <vector>

#include "gfft/gf.hpp"

namespace gfft {

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Elem> apply(const std::vector<Elem>& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

std::size_t rank(Matrix m);
/// Inverse of a square matrix; throws `err` when singular.
Matrix inverse(const Matrix& m, Errc err = Errc::SingularMatrix);
/// Solves m x = b for square invertible m.
std::vector<Elem> solve(const Matrix& m, const std::vector<Elem>& b);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Elem>> nullspace(const Matrix& m);

}  // namespace gfft
