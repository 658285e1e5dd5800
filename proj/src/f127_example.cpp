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

#include "gfft/f127_example.hpp"

#include <sstream>

namespace gfft::f127 {

const std::array<std::uint32_t, 128>& coefficients() {
  static const std::array<std::uint32_t, 128> kCoeffs = {
    15, 4, 37, 109, 3, 87, 116, 18, 10, 90, 73, 51, 92, 66, 121, 86,
    70, 13, 21, 95, 29, 122, 78, 122, 78, 41, 26, 49, 44, 66, 19, 66,
    40, 121, 81, 3, 116, 4, 50, 40, 121, 85, 25, 66, 38, 55, 42, 98,
    37, 116, 15, 49, 33, 100, 86, 120, 104, 61, 114, 0, 10, 17, 68, 91,
    81, 98, 124, 44, 5, 23, 119, 115, 25, 73, 10, 113, 17, 91, 11, 86,
    118, 8, 31, 63, 32, 21, 62, 77, 51, 90, 53, 89, 48, 97, 11, 15,
    77, 8, 64, 63, 7, 62, 55, 92, 116, 116, 118, 53, 80, 39, 47, 84,
    53, 100, 4, 97, 40, 106, 108, 39, 107, 25, 67, 51, 87, 90, 111, 93,
  };
  return kCoeffs;
}

const std::array<Row, 128>& evaluations() {
  static const std::array<Row, 128> kRows = {{
    {-1, 0, 0}, {0, 86, 61}, {1, 40, 102}, {2, 79, 89}, {3, 104, 43}, {4, 0, 0},
    {5, 92, 104}, {6, 54, 32}, {7, 101, 101}, {8, 55, 114}, {9, 96, 83}, {10, 40, 22},
    {11, 3, 62}, {12, 31, 68}, {13, 16, 100}, {14, 29, 116}, {15, 110, 69}, {16, 41, 35},
    {17, 62, 44}, {18, 89, 92}, {19, 119, 34}, {20, 68, 5}, {21, 42, 64}, {22, 85, 35},
    {23, 68, 48}, {24, 91, 33}, {25, 98, 111}, {26, 117, 53}, {27, 25, 48}, {28, 77, 83},
    {29, 76, 109}, {30, 23, 17}, {31, 9, 99}, {32, 116, 22}, {33, 75, 81}, {34, 114, 12},
    {35, 109, 6}, {36, 69, 52}, {37, 68, 9}, {38, 61, 123}, {39, 35, 22}, {40, 83, 72},
    {41, 10, 79}, {42, 122, 85}, {43, 89, 11}, {44, 58, 1}, {45, 111, 107}, {46, 108, 57},
    {47, 10, 16}, {48, 109, 91}, {49, 3, 63}, {50, 123, 86}, {51, 76, 8}, {52, 93, 9},
    {53, 96, 62}, {54, 102, 106}, {55, 77, 79}, {56, 105, 52}, {57, 77, 83}, {58, 77, 31},
    {59, 85, 121}, {60, 72, 66}, {61, 40, 48}, {62, 126, 74}, {63, 20, 68}, {64, 98, 107},
    {65, 54, 60}, {66, 11, 112}, {67, 51, 57}, {68, 105, 95}, {69, 36, 71}, {70, 23, 71},
    {71, 84, 82}, {72, 30, 124}, {73, 113, 84}, {74, 110, 72}, {75, 124, 119}, {76, 93, 5},
    {77, 73, 22}, {78, 106, 106}, {79, 69, 55}, {80, 3, 31}, {81, 74, 71}, {82, 120, 118},
    {83, 46, 47}, {84, 22, 18}, {85, 16, 97}, {86, 36, 50}, {87, 6, 31}, {88, 4, 10},
    {89, 89, 93}, {90, 36, 105}, {91, 48, 71}, {92, 75, 101}, {93, 74, 14}, {94, 38, 103},
    {95, 65, 114}, {96, 48, 15}, {97, 40, 104}, {98, 15, 65}, {99, 77, 6}, {100, 120, 30},
    {101, 94, 2}, {102, 105, 77}, {103, 68, 94}, {104, 34, 77}, {105, 111, 59}, {106, 123, 89},
    {107, 126, 91}, {108, 69, 33}, {109, 21, 100}, {110, 42, 107}, {111, 123, 108}, {112, 0, 0},
    {113, 10, 75}, {114, 43, 17}, {115, 41, 5}, {116, 96, 30}, {117, 99, 31}, {118, 37, 117},
    {119, 40, 11}, {120, 53, 90}, {121, 58, 17}, {122, 73, 33}, {123, 24, 95}, {124, 68, 43},
    {125, 8, 126}, {126, 48, 109},
  }};
  return kRows;
}

CyclicPlan plan() {
  FieldPtr f = Field::make(kP);
  return cyclic_plan(f, std::vector<unsigned>(kLevels, 2),
                     std::make_pair(f->element(kA), f->element(kB)));
}

Report replay(const std::vector<Row>& expected) {
  Report rep;
  const CyclicPlan pl = plan();
  const Field& f = *pl.field;
  auto check = [&](const std::string& name, const std::string& got, const std::string& want) {
    const bool ok = got == want;
    rep.structure_ok = rep.structure_ok && ok;
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + name + " = " + got +
                        (ok ? "" : " (expected " + want + ")"));
  };
  check("Q", pl.q_poly.to_string(), kQ);
  std::ostringstream lam, want_lam;
  for (std::size_t i = 0; i < pl.lambdas.size(); ++i) {
    lam << (i ? "," : "") << pl.lambdas[i][0].code();
    want_lam << (i ? "," : "") << kLambdas[i];
  }
  check("lambda", lam.str(), want_lam.str());
  check("x_1", pl.xs[1].to_string(), kX1);
  check("u_70", pl.u_r0.to_string(), kU70);
  check("c_r0", std::to_string(pl.c_r0.code()), std::to_string(kCr0));

  std::ostringstream cs, want_cs;
  for (std::size_t j = 0; j < pl.tower.levels.size(); ++j) {
    cs << (j ? "," : "") << pole_constant(pl, j, 1, 1).code();
    want_cs << (j ? "," : "") << kPrintedC[j];
  }
  const bool c_ok = cs.str() == want_cs.str();
  rep.lines.push_back(std::string(c_ok ? "ok   " : "DIFF ") + "c = " + cs.str() +
                      (c_ok ? "" : " (listed " + want_cs.str() + ")"));

  std::vector<Elem> coeffs;
  for (auto v : coefficients()) coeffs.push_back(f.element(v));
  const CyclicEval ev = q1_eval(pl, {Basis::CyclicZ, coeffs});
  rep.total = expected.size();
  for (const Row& row : expected) {
    const Place want = row.alpha < 0 ? Place::infinity()
                                     : Place::finite(f.element(static_cast<std::uint32_t>(row.alpha)));
    bool ok = false;
    std::string got = "missing";
    for (std::size_t s = 0; s < ev.points.size(); ++s) {
      if (ev.points[s] != want) continue;
      const auto [fv, ft] = reported_pair(ev, s);
      ok = fv.code() == row.f && ft.code() == row.f_tilde;
      got = std::to_string(fv.code()) + " " + std::to_string(ft.code());
      break;
    }
    if (ok) {
      ++rep.matched;
    } else if (rep.first_mismatch.empty()) {
      rep.first_mismatch = "alpha " + want.to_string() + ": got " + got + ", expected " +
                           std::to_string(row.f) + " " + std::to_string(row.f_tilde);
    }
  }
  return rep;
}

}  // namespace gfft::f127
