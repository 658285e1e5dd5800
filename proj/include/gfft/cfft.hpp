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
#include <utility>
#include <vector>

#include "gfft/gf.hpp"
#include "gfft/moebius.hpp"
#include "gfft/poly.hpp"
#include "gfft/tower.hpp"
#include "gfft/vectors.hpp"
#include "json.hpp"

namespace gfft {

/// Per-level tables for the z-basis / standard-basis change. Level j covers
/// the step from G_j to G_{j+1}.
struct CyclicConvLevel {
  /// Monic denominator of x_j in x.
  Poly d;
  /// ebar[m-1] = (num(x_j) - lambda_{j+1,m} d) made monic.
  std::vector<Poly> ebar;
  /// lead_prefix[k] = prod_{m<=k} lead(num(x_j) - lambda_{j+1,m} d).
  std::vector<Elem> lead_prefix;
  /// dpow_inv[k] = (d^k)^(-1) mod ebar[k-1], k >= 1.
  std::vector<Poly> dpow_inv;
};

/// Cyclic plan for n | q+1 from the order-(q+1) map sigma(x) = 1/(-b x - a)
/// attached to a primitive m(x) = x^2 + a x + b.
struct CyclicPlan {
  explicit CyclicPlan(FieldPtr f)
      : field(f), q_poly(*f), sigma(Moebius::identity(*f)), u_r0(*f), d_r0(*f) {}

  FieldPtr field;
  Elem a, b;
  /// Q(x) = x^2 + (a/b) x + 1/b.
  Poly q_poly;
  Moebius sigma;
  std::vector<unsigned> radices;
  std::size_t n = 1;
  /// taus[i-1] generates G_i.
  std::vector<Moebius> taus;
  /// x_0 = x, ..., x_r as functions of x.
  std::vector<RatFn> xs;
  /// tau_bars[i-1]: x_{i-1} o tau_i = tau_bar_i(x_{i-1}).
  std::vector<Moebius> tau_bars;
  /// level_maps[i-1] = X_i with x_i = X_i(x_{i-1}).
  std::vector<RatFn> level_maps;
  /// lambdas[i-1][k-1] = lambda_{i,k} = tau_bar_i^k(infinity).
  std::vector<std::vector<Elem>> lambdas;
  /// u_r0 = num(x_r), d_r0 = den(x_r) (monic).
  Poly u_r0;
  Poly d_r0;
  Elem c_r0;
  /// Value of x_r on the evaluation fiber; nullopt for the full line.
  std::optional<Elem> fiber;
  std::vector<Place> points;
  /// scale[s] = c_r0 Q^n(a)/u_r0(a) at finite points; zero at infinity.
  std::vector<Elem> scale;
  Tower tower;
  std::vector<CyclicConvLevel> conv;

  bool full_line() const { return !fiber.has_value(); }
};

/// Evaluations of f and of f~ = u_r0/(c_r0 Q^n) f over plan.points.
/// For n = q+1 the infinity slot of `values` is the coefficient of x^(n-1)
/// of f and the infinity slot of `tilde` is f~(P_inf) = 0.
struct CyclicEval {
  std::vector<Place> points;
  std::vector<Elem> values;
  std::vector<Elem> tilde;
};

/// `m` overrides the default (least primitive) m-polynomial; `fiber` picks the
/// value of x_r defining the point set when n < q+1 (default: least nonzero).
CyclicPlan cyclic_plan(FieldPtr field, const std::vector<unsigned>& radices,
                       std::optional<std::pair<Elem, Elem>> m = std::nullopt,
                       std::optional<Elem> fiber = std::nullopt);

CyclicEval q1_eval(const CyclicPlan& plan, const CoeffVec& coeffs);
EvalVec q1_fft(const CyclicPlan& plan, const CoeffVec& coeffs);
CoeffVec q1_ifft(const CyclicPlan& plan, const EvalVec& values);

/// (f, f~) at position s with infinity reported as (0, 0).
std::pair<Elem, Elem> reported_pair(const CyclicEval& ev, std::size_t s);

CoeffVec std_to_tilde(const CyclicPlan& plan, const CoeffVec& f);
CoeffVec tilde_to_std(const CyclicPlan& plan, const CoeffVec& coeffs);

/// y_i(alpha) = prod_{tau in G_i} 1/Q(tau(alpha)); zero when some tau(alpha)
/// is infinity.
Elem y_value(const CyclicPlan& plan, std::size_t level, Elem alpha);

/// Pole-fiber constant (x_r y_r z_j^(k))(P_lambda_{j+1,i}), 1 <= i <= k < p_{j+1}.
Elem pole_constant(const CyclicPlan& plan, std::size_t j, std::size_t i, std::size_t k);

nlohmann::json cyclic_plan_to_json(const CyclicPlan& plan);
CyclicPlan cyclic_plan_from_json(const nlohmann::json& j);

}  // namespace gfft
