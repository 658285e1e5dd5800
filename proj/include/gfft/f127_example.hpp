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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gfft/cfft.hpp"

namespace gfft::f127 {

/// Worked example over F_127 with radices 2^7 and m(x) = x^2 + 126x + 3.
inline constexpr std::uint32_t kP = 127;
inline constexpr std::uint32_t kA = 126;
inline constexpr std::uint32_t kB = 3;
inline constexpr unsigned kLevels = 7;

/// One evaluation row; alpha = -1 stands for the infinite place.
struct Row {
  int alpha;
  std::uint32_t f;
  std::uint32_t f_tilde;
};

/// Cyclic z-basis coefficients a_0..a_127.
const std::array<std::uint32_t, 128>& coefficients();
/// Expected (f, f~) for every place.
const std::array<Row, 128>& evaluations();

inline constexpr std::array<std::uint32_t, 7> kLambdas = {106, 85, 43, 86, 45, 90, 53};
/// Constants listed with the example for (y_7 x_7/(x_j - lambda_j)) at x_j = lambda_j.
inline constexpr std::array<std::uint32_t, 7> kPrintedC = {106, 101, 64, 34, 35, 1, 0};
inline constexpr std::uint32_t kCr0 = 100;
inline constexpr const char* kQ = "x^2+42x+85";
inline constexpr const char* kX1 = "(x^2+42)/(x+21)";
inline constexpr const char* kU70 = "x^128+42x+85";

/// Builds the plan of the example.
CyclicPlan plan();

/// Outcome of replaying the example against a table of expected rows.
struct Report {
  std::vector<std::string> lines;
  std::size_t matched = 0;
  std::size_t total = 0;
  bool structure_ok = true;
  /// First mismatching row, as text; empty when all rows match.
  std::string first_mismatch;
};

/// Checks Q, lambda, x_1, u_70, c_r0 and the evaluation table. The printed
/// c-list is reported but does not affect `structure_ok`.
Report replay(const std::vector<Row>& expected);

}  // namespace gfft::f127
