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

#include "gfft/gf.hpp"
#include "gfft/poly.hpp"
#include "gfft/tower.hpp"
#include "gfft/vectors.hpp"
#include "json.hpp"

namespace gfft {

/// Additive plan for n = p^r | q. Evaluates at W_r = span_{F_p}(alpha_1..alpha_r)
/// with point index sum_i e_i p^(i-1) for a = sum_i e_i alpha_i. The transform
/// basis is prod_i l_i^(e_i), index e = sum_i e_i p^i.
struct AddPlan {
  FieldPtr field;
  std::vector<Elem> basis;
  unsigned p = 2;
  std::size_t r = 0;
  std::size_t n = 1;
  /// betas[i-1] = l_{i-1}(alpha_i)^(p-1).
  std::vector<Elem> betas;
  /// ells[i] = l_i, with l_0 = x.
  std::vector<Poly> ells;
  std::vector<Elem> points;
  Tower tower;
};

AddPlan add_plan(FieldPtr field, const std::vector<Elem>& basis);

/// l_i(w) by the recurrence l_i = l_{i-1}^p - beta_i l_{i-1}.
Elem ell_value(const AddPlan& plan, std::size_t i, Elem w);

EvalVec add_fft(const AddPlan& plan, const CoeffVec& coeffs);
CoeffVec add_ifft(const AddPlan& plan, const EvalVec& values);

/// Terms a_m with f = sum_m a_m(x) (x^p - alpha x)^m and deg a_m < p.
std::vector<Poly> padic_expand(const Poly& f, Elem alpha);
/// Inverse of padic_expand.
Poly padic_assemble(const std::vector<Poly>& terms, Elem alpha);

CoeffVec standard_to_lch(const AddPlan& plan, const CoeffVec& f);
CoeffVec lch_to_standard(const AddPlan& plan, const CoeffVec& coeffs);

nlohmann::json add_plan_to_json(const AddPlan& plan);
AddPlan add_plan_from_json(const nlohmann::json& j);

}  // namespace gfft
