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

#include <string>
#include <vector>

#include "gfft/gf.hpp"
#include "gfft/poly.hpp"
#include "json.hpp"

namespace gfft {

enum class Basis { Standard, Lch, CyclicZ };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// Length-n coefficient sequence tagged with its basis.
struct CoeffVec {
  Basis basis = Basis::Standard;
  std::vector<Elem> coeffs;
};

/// Values aligned with an ordered point set. For the q+1 cyclic case the
/// entry at the infinite place is the coefficient of x^(n-1) of f.
struct EvalVec {
  std::vector<Place> points;
  std::vector<Elem> values;
};

/// "inf" or the element encoding.
nlohmann::json place_to_json(const Place& place);
Place place_from_json(const Field& field, const nlohmann::json& j);

void require_basis(const CoeffVec& v, Basis expected);
void require_length(std::size_t got, std::size_t expected, const char* what);

}  // namespace gfft
