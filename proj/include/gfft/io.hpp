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

#include "gfft/gf.hpp"
#include "gfft/vectors.hpp"
#include "json.hpp"

namespace gfft {

/// {"basis": tag, "coeffs": [...]}.
nlohmann::json coeffs_to_json(const CoeffVec& v);
CoeffVec coeffs_from_json(const Field& field, const nlohmann::json& j);

/// {"points": [...finite], "values": [...], "inf": v}; "inf" only when the
/// point set contains the infinite place.
nlohmann::json values_to_json(const EvalVec& v);
EvalVec values_from_json(const Field& field, const nlohmann::json& j);

/// CSV forms use integer element codes. Coefficients: a "# basis=<tag>" line
/// then one coefficient per line in ascending index. Values: "point,value"
/// rows with point "inf" for the infinite place.
std::string coeffs_to_csv(const CoeffVec& v);
CoeffVec coeffs_from_csv(const Field& field, const std::string& text);
std::string values_to_csv(const EvalVec& v);
EvalVec values_from_csv(const Field& field, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gfft
