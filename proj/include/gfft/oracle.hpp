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

#include <vector>

#include "gfft/afft.hpp"
#include "gfft/cfft.hpp"
#include "gfft/matrix.hpp"
#include "gfft/mfft.hpp"
#include "gfft/poly.hpp"

namespace gfft {

/// Horner evaluation at each point. The infinite place reads the coefficient
/// of x^(n-1), n = coeffs.size().
std::vector<Elem> mpe_horner(const std::vector<Elem>& coeffs, const std::vector<Place>& points);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
Poly lagrange_interpolate(const Field& field, const std::vector<Elem>& xs,
                          const std::vector<Elem>& ys);

/// Column e holds the standard coefficients of basis element e.
Matrix basis_matrix(const MultPlan& plan);
Matrix basis_matrix(const AddPlan& plan);
/// Built from x_0..x_r and the lambdas by rational-function arithmetic.
Matrix basis_matrix(const CyclicPlan& plan);

/// Standard coefficients of a basis-coordinate vector.
std::vector<Elem> to_standard(const Matrix& basis, const std::vector<Elem>& coeffs);
/// Basis coordinates of a standard coefficient vector.
std::vector<Elem> from_standard(const Matrix& basis, const std::vector<Elem>& coeffs);

}  // namespace gfft
