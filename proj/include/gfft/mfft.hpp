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
#include "gfft/tower.hpp"
#include "gfft/vectors.hpp"
#include "json.hpp"

namespace gfft {

/// Multiplicative plan for n | q-1 over the power-map tower
/// x_i = x_{i-1}^{p_i}, evaluating at beta * omega^j for j = 0..n-1.
struct MultPlan {
  FieldPtr field;
  std::vector<unsigned> radices;
  std::size_t n = 1;
  Elem beta;
  Elem alpha;
  Elem omega;
  std::vector<Elem> points;
  Tower tower;
};

MultPlan mult_plan(FieldPtr field, const std::vector<unsigned>& radices,
                   std::optional<Elem> beta = std::nullopt);

EvalVec mult_fft(const MultPlan& plan, const CoeffVec& coeffs);
CoeffVec mult_ifft(const MultPlan& plan, const EvalVec& values);

nlohmann::json mult_plan_to_json(const MultPlan& plan);
MultPlan mult_plan_from_json(const nlohmann::json& j);

}  // namespace gfft
