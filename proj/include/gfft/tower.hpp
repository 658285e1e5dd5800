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

#include <cstddef>
#include <optional>
#include <vector>

#include "gfft/gf.hpp"
#include "gfft/matrix.hpp"

namespace gfft {

/// Fiber of P^(j) lying over P_{j+1,inf} in the q+1 case. Its child 0 is
/// P_{j,inf}; child i >= 1 is the place x_j = lambda_{j+1,i}.
struct PoleFiber {
  /// Position of P_{j+1,inf} among the places of level j+1.
  std::size_t parent = 0;
  /// constants[(i-1)*(p-1) + (k-1)] = (x_r y_r z_j^(k))(P_{lambda_i}), i <= k.
  std::vector<Elem> constants;
};

/// One merge step of the recursion: places of level j grouped into fibers
/// over the places of level j+1.
struct TowerLevel {
  unsigned radix = 1;
  std::size_t size = 1;
  /// child_pos[t*radix + c]: position of child c of parent t.
  std::vector<std::size_t> child_pos;
  /// weights[pos*(radix-1) + k]: the factor w_{k+1}(pos). The basis function
  /// of digit k is prod_{m<=k} w_m, so values combine by Horner in w.
  std::vector<Elem> weights;
  /// inv_local[(t*radix + k)*radix + c]: inverse of the per-fiber matrix
  /// M[c][k] = prod_{m<=k} w_m(child c).
  std::vector<Elem> inv_local;
  std::optional<PoleFiber> pole;
};

/// Generic G-FFT recursion over a tower F = F_0 > F_1 > ... > F_r.
/// Coefficient index e = e_0 + e_1 p_1 + e_2 p_1 p_2 + ...; level j splits on
/// the digit e_j.
struct Tower {
  std::vector<TowerLevel> levels;
  /// Value of the level-r basis function at the single place of P^(r).
  Elem leaf_scale;
  /// True when that place is a zero of the level-r basis function.
  bool leaf_vanishes = false;

  std::size_t length() const { return levels.empty() ? 1 : levels.front().size; }

  std::vector<Elem> forward(const std::vector<Elem>& coeffs) const;
  /// `top_coeff` supplies coefficient 0 when the leaf vanishes.
  std::vector<Elem> inverse(const std::vector<Elem>& values, Elem top_coeff) const;
};

/// Fills inv_local from weights for every fiber except the pole fiber.
void build_local_inverses(TowerLevel& level, const Field& field);

/// Worker count from GFFT_THREADS (0 or unset: serial).
std::size_t worker_count();

}  // namespace gfft
