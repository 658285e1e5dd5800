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

#include "gfft/vectors.hpp"

namespace gfft {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Standard: return "standard";
    case Basis::Lch: return "lch";
    case Basis::CyclicZ: return "cyclic-z";
  }
  return "standard";
}

Basis basis_from_name(const std::string& name) {
  if (name == "standard") return Basis::Standard;
  if (name == "lch") return Basis::Lch;
  if (name == "cyclic-z") return Basis::CyclicZ;
  throw Error(Errc::ParseError, "unknown basis tag: " + name);
}

nlohmann::json place_to_json(const Place& place) {
  return place.is_infinity() ? nlohmann::json("inf") : elem_to_json(place.alpha());
}

Place place_from_json(const Field& field, const nlohmann::json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Place::infinity();
  return Place::finite(elem_from_json(field, j));
}

void require_basis(const CoeffVec& v, Basis expected) {
  if (v.basis != expected) {
    throw Error(Errc::BasisMismatch,
                "expected basis " + basis_name(expected) + ", got " + basis_name(v.basis));
  }
}

void require_length(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw Error(Errc::LengthMismatch, std::string(what) + ": expected length " +
                                          std::to_string(expected) + ", got " +
                                          std::to_string(got));
  }
}

}  // namespace gfft
