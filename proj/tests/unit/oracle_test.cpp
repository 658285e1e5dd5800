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

#include "gfft/oracle.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gfft {
namespace {

using testing_support::error_of;
using testing_support::poly_of;
using testing_support::random_elems;

TEST(Horner, ZeroPolynomialAndInfinity) {
  auto f = Field::make(13);
  std::vector<Place> pts{Place::finite(f->element(2)), Place::finite(f->element(5)), Place::infinity()};
  auto v = mpe_horner(std::vector<Elem>(4, f->zero()), pts);
  EXPECT_EQ(v, std::vector<Elem>(3, f->zero()));
  // The infinite place reads the coefficient of x^(n-1).
  auto w = mpe_horner(testing_support::elems(*f, {1, 2, 3, 4}), pts);
  EXPECT_EQ(w[0], f->element((1 + 2 * 2 + 3 * 4 + 4 * 8) % 13));
  EXPECT_EQ(w[2], f->element(4));
}

TEST(Lagrange, SinglePointIsConstant) {
  auto f = Field::make(17);
  Poly g = lagrange_interpolate(*f, {f->element(4)}, {f->element(9)});
  EXPECT_EQ(g, Poly::constant(f->element(9)));
}

TEST(Lagrange, RecoversKnownPolynomial) {
  std::mt19937_64 rng(51);
  auto f = Field::make(3, 3);
  for (int t = 0; t < 20; ++t) {
    Poly g(*f, random_elems(*f, 10, rng));
    std::vector<Elem> xs, ys;
    for (std::uint32_t c = 0; c < 10; ++c) {
      xs.push_back(f->element(c * 2));
      ys.push_back(g(xs.back()));
    }
    EXPECT_EQ(lagrange_interpolate(*f, xs, ys), g);
  }
}

TEST(Lagrange, RejectsDuplicatePoints) {
  auto f = Field::make(17);
  EXPECT_EQ(error_of([&] {
              lagrange_interpolate(*f, {f->element(3), f->element(3)}, {f->one(), f->zero()});
            }),
            Errc::DuplicatePoint);
}

// Interpolating the finite values of q1_fft recovers tilde_to_std(coeffs).
// For n = q+1 only q finite points exist; the top coefficient comes from the
// infinity slot and a0 (x^q - x) vanishes on all of F_q.
TEST(Lagrange, InvertsCyclicTransform) {
  std::mt19937_64 rng(52);
  for (auto [q, radices] : std::vector<std::pair<std::uint32_t, std::vector<unsigned>>>{
           {23, {2, 2, 2, 3}}, {11, {2, 2}}, {11, {3, 2, 2}}, {7, {2, 2, 2}}}) {
    auto f = Field::make(q);
    auto plan = cyclic_plan(f, radices);
    for (int t = 0; t < 10; ++t) {
      CoeffVec c{Basis::CyclicZ, random_elems(*f, plan.n, rng)};
      auto ev = q1_fft(plan, c);
      std::vector<Elem> xs, ys;
      Elem top = f->zero();
      for (std::size_t s = 0; s < plan.n; ++s) {
        if (ev.points[s].is_infinity()) {
          top = ev.values[s];
          continue;
        }
        xs.push_back(ev.points[s].alpha());
        ys.push_back(ev.values[s]);
      }
      Poly g = lagrange_interpolate(*f, xs, ys);
      if (plan.full_line()) g = g + top * Poly::frobenius_minus_x(*f);
      EXPECT_EQ(g, Poly(*f, tilde_to_std(plan, c).coeffs)) << "q=" << q << " n=" << plan.n;
    }
  }
}

TEST(BasisMatrix, MultiplicativeIsIdentity) {
  for (auto [p, radices] : std::vector<std::pair<std::uint32_t, std::vector<unsigned>>>{
           {17, {2, 2, 2, 2}}, {127, {2, 3, 3, 7}}}) {
    auto f = Field::make(p);
    auto plan = mult_plan(f, radices);
    EXPECT_EQ(basis_matrix(plan), Matrix::identity(*f, plan.n));
  }
}

TEST(BasisMatrix, LengthOneIsOne) {
  auto f = Field::make(7);
  Matrix one = Matrix::identity(*f, 1);
  EXPECT_EQ(basis_matrix(mult_plan(f, {})), one);
  EXPECT_EQ(basis_matrix(add_plan(f, {})), one);
  EXPECT_EQ(basis_matrix(cyclic_plan(f, {})), one);
}

TEST(BasisMatrix, AdditiveColumnsAreLinearizedProducts) {
  auto f = Field::make(3, 2);
  auto plan = add_plan(f, {f->one(), find_primitive_element(*f)});
  Matrix b = basis_matrix(plan);
  // Column p holds l_1 = x^3 - x.
  std::vector<Elem> col;
  for (std::size_t i = 0; i < 9; ++i) col.push_back(b(i, 3));
  EXPECT_EQ(Poly(*f, col), Poly::monomial(f->one(), 3) - Poly::x(*f));
  // Column 4 = 1 + 1*3 holds l_0 l_1.
  col.clear();
  for (std::size_t i = 0; i < 9; ++i) col.push_back(b(i, 4));
  EXPECT_EQ(Poly(*f, col), Poly::x(*f) * plan.ells[1]);
  EXPECT_EQ(rank(b), 9u);
}

TEST(BasisMatrix, InvertibleForAllPlanKinds) {
  std::mt19937_64 rng(53);
  std::vector<Matrix> mats;
  auto f27 = Field::make(3, 3);
  mats.push_back(basis_matrix(add_plan(f27, {f27->one()})));
  mats.push_back(basis_matrix(add_plan(f27, {f27->element(1), f27->element(3), f27->element(9)})));
  auto f64 = Field::make(2, 6);
  std::vector<Elem> b64;
  for (std::uint32_t c = 1; c < 64; c *= 2) b64.push_back(f64->element(c));
  mats.push_back(basis_matrix(add_plan(f64, b64)));
  auto f23 = Field::make(23), f11 = Field::make(11);
  mats.push_back(basis_matrix(cyclic_plan(f23, {2, 2, 2, 3})));
  mats.push_back(basis_matrix(cyclic_plan(f11, {2, 2})));
  for (const auto& m : mats) {
    EXPECT_EQ(rank(m), m.rows());
    auto v = random_elems(m.field(), m.rows(), rng);
    EXPECT_EQ(from_standard(m, to_standard(m, v)), v);
  }
}

TEST(BasisMatrix, CyclicAgreesWithF127Conversion) {
  auto f = Field::make(127);
  auto plan = cyclic_plan(f, std::vector<unsigned>(7, 2), std::make_pair(f->element(126), f->element(3)));
  Matrix b = basis_matrix(plan);
  std::mt19937_64 rng(54);
  auto c = random_elems(*f, 128, rng);
  EXPECT_EQ(to_standard(b, c), tilde_to_std(plan, CoeffVec{Basis::CyclicZ, c}).coeffs);
}

}  // namespace
}  // namespace gfft
