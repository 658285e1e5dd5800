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

#include "gfft/error.hpp"

namespace gfft {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::RadixProductNotDividingOrder: return "RadixProductNotDividingOrder";
    case Errc::NoMoebiusRelation: return "NoMoebiusRelation";
    case Errc::RadixNotDividingGroupOrder: return "RadixNotDividingGroupOrder";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::SubspaceTooLarge: return "SubspaceTooLarge";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::RadixNotDividing: return "RadixNotDividing";
    case Errc::PrimitivityFailure: return "PrimitivityFailure";
    case Errc::SplitValidationFailure: return "SplitValidationFailure";
    case Errc::SingularLocalSystem: return "SingularLocalSystem";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gfft
