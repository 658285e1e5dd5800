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

#include "gfft/gf.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gfft {
namespace {

using testing_support::error_of;

// Order of `g` by brute-force iteration, independent of multiplicative_order.
std::uint64_t naive_order(Elem g) {
  Elem acc = g;
  std::uint64_t k = 1;
  while (!acc.is_one()) {
    acc = acc * g;
    ++k;
  }
  return k;
}

TEST(Field, MakesPrimeFields) {
  auto f127 = Field::make(127);
  EXPECT_EQ(f127->p(), 127u);
  EXPECT_EQ(f127->r(), 1u);
  EXPECT_EQ(f127->q(), 127u);
  auto f2 = Field::make(2);
  EXPECT_EQ(f2->q(), 2u);
  EXPECT_EQ((f2->one() + f2->one()), f2->zero());
}

TEST(Field, F9UsesLeastIrreducibleQuadratic) {
  // Exhaustive search over monic quadratics x^2 + c1 x + c0 by code c0 + 3 c1.
  std::vector<std::uint32_t> expected;
  for (std::uint32_t code = 0; code < 9 && expected.empty(); ++code) {
    std::uint32_t c0 = code % 3, c1 = code / 3;
    bool has_root = false;
    for (std::uint32_t x = 0; x < 3; ++x) {
      if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
    }
    if (!has_root) expected = {c0, c1, 1};
  }
  auto f9 = Field::make(3, 2);
  EXPECT_EQ(f9->q(), 9u);
  EXPECT_EQ(f9->modulus(), expected);
}

TEST(Field, RejectsBadInputs) {
  EXPECT_EQ(error_of([] { Field::make(15); }), Errc::NonPrimeP);
  EXPECT_EQ(error_of([] { Field::make(1); }), Errc::NonPrimeP);
  // x^2 + 2 = (x - 1)(x + 1) over F_3.
  EXPECT_EQ(error_of([] { Field::make(3, 2, std::vector<std::uint32_t>{2, 0}); }),
            Errc::ReducibleModulus);
  EXPECT_EQ(error_of([] { Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1}); }),
            std::nullopt);
}

TEST(Field, InverseOfThreeInF127) {
  auto f = Field::make(127);
  EXPECT_EQ(f->element(3).inv(), f->element(85));
  EXPECT_EQ(error_of([&] { f->zero().inv(); }), Errc::ZeroInverse);
  EXPECT_EQ(error_of([&] { f->one() / f->zero(); }), Errc::ZeroInverse);
}

TEST(Field, MixedFieldsRejected) {
  auto a = Field::make(7);
  auto b = Field::make(11);
  EXPECT_EQ(error_of([&] { a->one() + b->one(); }), Errc::MixedFields);
  EXPECT_EQ(error_of([&] { a->one() * b->one(); }), Errc::MixedFields);
}

TEST(Field, MultiplicativeIdentityAndGroupOrder) {
  auto f9 = Field::make(3, 2);
  for (std::uint32_t c = 0; c < 9; ++c) {
    Elem x = f9->element(c);
    EXPECT_EQ(x * f9->one(), x);
    if (c != 0) EXPECT_TRUE(x.pow(8).is_one());
  }
}

TEST(Field, InverseAndExponentLaws) {
  std::mt19937_64 rng(11);
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 2}, {2, 6}, {127, 1}, {3, 2}}) {
    auto f = Field::make(p, r);
    for (std::uint32_t c = 1; c < f->q(); ++c) {
      Elem x = f->element(c);
      EXPECT_TRUE((x * x.inv()).is_one());
    }
    std::uniform_int_distribution<std::uint64_t> ex(0, 10 * f->q());
    for (int t = 0; t < 200; ++t) {
      Elem x = testing_support::random_nonzero(*f, rng);
      std::uint64_t y = ex(rng), z = ex(rng);
      EXPECT_EQ(x.pow(y) * x.pow(z), x.pow((y + z) % (f->q() - 1)));
    }
  }
}

TEST(Field, DigitsRoundTrip) {
  auto f = Field::make(3, 3);
  for (std::uint32_t c = 0; c < f->q(); ++c) {
    Elem x = f->element(c);
    auto d = f->digits(x);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0] + 3 * d[1] + 9 * d[2], c);
    EXPECT_EQ(f->from_digits(d), x);
  }
}

TEST(Field, Frobenius) {
  auto f = Field::make(5, 2);
  for (std::uint32_t a = 0; a < 25; ++a) {
    for (std::uint32_t b = 0; b < 25; ++b) {
      Elem x = f->element(a), y = f->element(b);
      EXPECT_EQ((x + y).pow(5), x.pow(5) + y.pow(5));
    }
  }
}

TEST(PrimitiveElement, KnownValues) {
  EXPECT_EQ(find_primitive_element(*Field::make(127)).code(), 3u);
  EXPECT_EQ(find_primitive_element(*Field::make(2)).code(), 1u);
  EXPECT_EQ(find_primitive_element(*Field::make(17)).code(), 3u);
}

TEST(PrimitiveElement, HasFullOrder) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {127, 1}, {17, 1}, {3, 2}, {2, 6}, {5, 3}, {65537, 1}}) {
    auto f = Field::make(p, r);
    Elem g = find_primitive_element(*f);
    EXPECT_EQ(naive_order(g), f->q() - 1);
    for (auto l : prime_factors(f->q() - 1)) EXPECT_FALSE(g.pow((f->q() - 1) / l).is_one());
    EXPECT_EQ(multiplicative_order(g), f->q() - 1);
  }
}

TEST(PrimitiveQuadratic, AcceptsExamplePair) {
  auto f = Field::make(127);
  EXPECT_TRUE(is_primitive_quadratic(f->element(126), f->element(3)));
  // x^2 + 1 is irreducible over F_127 but its roots have order 4.
  EXPECT_FALSE(is_primitive_quadratic(f->zero(), f->one()));
}

TEST(PrimitiveQuadratic, F2) {
  auto f = Field::make(2);
  auto [a, b] = find_primitive_quadratic(*f);
  EXPECT_EQ(a.code(), 1u);
  EXPECT_EQ(b.code(), 1u);
}

TEST(PrimitiveQuadratic, RootHasOrderQSquaredMinusOne) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 127u}) {
    auto f = Field::make(p);
    auto [a, b] = find_primitive_quadratic(*f);
    // Build F_{p^2} = F_p[x]/(x^2 + a x + b); the class of x is a root.
    auto ext = Field::make(p, 2, std::vector<std::uint32_t>{b.code(), a.code()});
    EXPECT_EQ(naive_order(ext->element(p)), std::uint64_t(p) * p - 1) << "p=" << p;
    for (std::uint32_t x = 0; x < p; ++x) {
      EXPECT_FALSE((f->element(x) * f->element(x) + a * f->element(x) + b).is_zero());
    }
  }
}

TEST(Counters, CountOperationsInScope) {
  auto f = Field::make(17);
  OpCounter c;
  {
    CountingScope scope(c);
    Elem x = f->element(3) + f->element(5);
    x = x * f->element(7);
    x = x.inv();
    (void)x;
  }
  EXPECT_EQ(c.adds, 1u);
  EXPECT_EQ(c.muls, 1u);
  EXPECT_EQ(c.invs, 1u);
  EXPECT_EQ(c.total(), 3u);
  Elem y = f->element(2) * f->element(2);
  (void)y;
  EXPECT_EQ(c.total(), 3u);
}

TEST(Counters, CompoundEqualsSumOfParts) {
  auto f = Field::make(101);
  Elem a = f->element(4), b = f->element(9), c = f->element(77), d = f->element(5);
  OpCounter whole, part1, part2, part3;
  {
    CountingScope s(whole);
    Elem r = a * b + c * d;
    (void)r;
  }
  Elem ab, cd;
  {
    CountingScope s(part1);
    ab = a * b;
  }
  {
    CountingScope s(part2);
    cd = c * d;
  }
  {
    CountingScope s(part3);
    Elem r = ab + cd;
    (void)r;
  }
  EXPECT_EQ(whole.adds, part1.adds + part2.adds + part3.adds);
  EXPECT_EQ(whole.muls, part1.muls + part2.muls + part3.muls);
  EXPECT_EQ(whole.invs, part1.invs + part2.invs + part3.invs);
}

TEST(Counters, InnermostScopeReceivesCounts) {
  auto f = Field::make(17);
  OpCounter outer, inner;
  {
    CountingScope s1(outer);
    Elem x = f->element(2) * f->element(3);
    {
      CountingScope s2(inner);
      x = x * x;
      x = x * x;
    }
    x = x + x;
    (void)x;
  }
  EXPECT_EQ(outer.muls, 1u);
  EXPECT_EQ(outer.adds, 1u);
  EXPECT_EQ(inner.muls, 2u);
}

TEST(FieldJson, RoundTrip) {
  auto f = Field::make(3, 3);
  auto g = field_from_json(field_to_json(*f));
  EXPECT_TRUE(g->same_as(*f));
  for (std::uint32_t c = 0; c < f->q(); ++c) {
    Elem x = f->element(c);
    auto j = elem_to_json(x);
    EXPECT_TRUE(j.is_array());
    EXPECT_EQ(elem_from_json(*f, j), x);
  }
  auto p = Field::make(127);
  EXPECT_EQ(elem_to_json(p->element(85)), nlohmann::json(85));
  EXPECT_EQ(elem_from_json(*p, nlohmann::json(85)), p->element(85));
}

}  // namespace
}  // namespace gfft
