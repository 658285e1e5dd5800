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

#include "gfft/moebius.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gfft {
namespace {

using testing_support::error_of;
using testing_support::poly_of;

Moebius random_map(const Field& f, std::mt19937_64& rng) {
  while (true) {
    auto e = testing_support::random_elems(f, 4, rng);
    if (!(e[0] * e[3] - e[1] * e[2]).is_zero()) return Moebius(e[0], e[1], e[2], e[3]);
  }
}

std::vector<Place> all_places(const Field& f) {
  std::vector<Place> out{Place::infinity()};
  for (std::uint32_t c = 0; c < f.q(); ++c) out.push_back(Place::finite(f.element(c)));
  return out;
}

TEST(Moebius, SigmaHasOrder128) {
  auto f = Field::make(127);
  Moebius sigma(f->zero(), f->one(), f->element(124), f->one());
  EXPECT_EQ(order(sigma), 128u);
  EXPECT_EQ(order(Moebius::identity(*f)), 1u);
}

TEST(Moebius, DiagonalMapHasOrderQMinusOne) {
  for (std::uint32_t p : {7u, 17u, 127u}) {
    auto f = Field::make(p);
    Elem g = find_primitive_element(*f);
    EXPECT_EQ(order(Moebius(g, f->zero(), f->zero(), f->one())), p - 1);
  }
}

TEST(Moebius, RejectsSingular) {
  auto f = Field::make(7);
  EXPECT_EQ(error_of([&] { Moebius(f->one(), f->one(), f->one(), f->one()); }),
            Errc::InvalidArgument);
}

TEST(Moebius, CanonicalizationIsProjective) {
  std::mt19937_64 rng(1);
  auto f = Field::make(11);
  for (int t = 0; t < 50; ++t) {
    Moebius m = random_map(*f, rng);
    Elem s = testing_support::random_nonzero(*f, rng);
    EXPECT_EQ(Moebius(s * m.a(), s * m.b(), s * m.c(), s * m.d()), m);
  }
}

TEST(Moebius, OrderOfPower) {
  std::mt19937_64 rng(2);
  auto f = Field::make(13);
  for (int t = 0; t < 30; ++t) {
    Moebius m = random_map(*f, rng);
    std::uint64_t o = order(m);
    for (std::uint64_t k = 1; k <= 14; ++k) EXPECT_EQ(order(m.pow(k)), o / std::gcd(o, k));
  }
}

TEST(Moebius, ActionOnPlaces) {
  auto f = Field::make(127);
  Moebius sigma(f->zero(), f->one(), f->element(124), f->one());
  for (const auto& p : all_places(*f)) EXPECT_EQ(Moebius::identity(*f).act(p), p);
  Place p = Place::infinity();
  std::set<Place> seen;
  for (int k = 0; k < 128; ++k) {
    seen.insert(p);
    p = sigma.act(p);
  }
  EXPECT_EQ(p, Place::infinity());
  EXPECT_EQ(seen.size(), 128u);
  // sigma(inf) = a/c = 0, sigma(0) = b/d = 1.
  EXPECT_EQ(sigma.act(Place::infinity()), Place::finite(f->zero()));
  EXPECT_EQ(sigma.act(Place::finite(f->zero())), Place::finite(f->one()));
}

TEST(Moebius, ActionIsGroupAction) {
  std::mt19937_64 rng(4);
  auto f = Field::make(11);
  for (int t = 0; t < 30; ++t) {
    Moebius m1 = random_map(*f, rng), m2 = random_map(*f, rng);
    for (const auto& p : all_places(*f)) EXPECT_EQ((m1 * m2).act(p), m1.act(m2.act(p)));
    EXPECT_TRUE((m1 * m1.inverse()).is_identity());
  }
}

TEST(Moebius, RatFnMatchesAction) {
  std::mt19937_64 rng(6);
  auto f = Field::make(7);
  for (int t = 0; t < 20; ++t) {
    Moebius m = random_map(*f, rng);
    RatFn g = m.as_ratfn();
    for (const auto& p : all_places(*f)) EXPECT_EQ(g.eval(p).as_place(), m.act(p));
  }
}

TEST(SubgroupChain, PowersOfSigma) {
  auto f = Field::make(127);
  Moebius sigma(f->zero(), f->one(), f->element(124), f->one());
  auto chain = subgroup_chain(sigma, std::vector<unsigned>(7, 2));
  ASSERT_EQ(chain.level_generators.size(), 7u);
  for (std::size_t i = 1; i <= 7; ++i) {
    EXPECT_EQ(chain.level_generators[i - 1], sigma.pow(std::uint64_t(1) << (7 - i)));
    EXPECT_EQ(chain.size(i), std::uint64_t(1) << i);
    EXPECT_EQ(chain.elements(i).size(), std::size_t(1) << i);
  }
  EXPECT_EQ(chain.level_generators.back(), sigma);
}

TEST(SubgroupChain, Trivial) {
  auto f = Field::make(127);
  Moebius sigma(f->zero(), f->one(), f->element(124), f->one());
  auto chain = subgroup_chain(sigma, {});
  EXPECT_TRUE(chain.level_generators.empty());
  EXPECT_EQ(chain.size(0), 1u);
}

TEST(SubgroupChain, OrderSixBothOrders) {
  auto f = Field::make(7);
  Moebius m(f->element(3), f->zero(), f->zero(), f->one());
  ASSERT_EQ(order(m), 6u);
  auto c23 = subgroup_chain(m, {2, 3});
  auto c32 = subgroup_chain(m, {3, 2});
  EXPECT_EQ(order(c23.level_generators[0]), 2u);
  EXPECT_EQ(order(c23.level_generators[1]), 6u);
  EXPECT_EQ(order(c32.level_generators[0]), 3u);
  EXPECT_EQ(order(c32.level_generators[1]), 6u);
  EXPECT_NE(c23.level_generators[0], c32.level_generators[0]);
  // tau_i^{p_i} generates G_{i-1}.
  EXPECT_EQ(c23.level_generators[1].pow(3), c23.level_generators[0]);
  EXPECT_EQ(c32.level_generators[1].pow(2), c32.level_generators[0]);
  EXPECT_EQ(error_of([&] { subgroup_chain(m, {4}); }), Errc::RadixProductNotDividingOrder);
}

TEST(MatchMoebius, Examples) {
  auto f = Field::make(127);
  RatFn h(poly_of(*f, {3, 0, 1}), poly_of(*f, {1, 1}));
  EXPECT_TRUE(match_moebius(h, h).is_identity());
  RatFn g(poly_of(*f, {1, 1}), poly_of(*f, {0, 1}));
  EXPECT_EQ(match_moebius(g, RatFn::x(*f)), Moebius(f->one(), f->one(), f->one(), f->zero()));
  EXPECT_EQ(error_of([&] { match_moebius(RatFn(poly_of(*f, {0, 0, 1})), RatFn::x(*f)); }),
            Errc::NoMoebiusRelation);
}

TEST(MatchMoebius, InducedMapOnFirstLevel) {
  auto f = Field::make(127);
  Moebius sigma(f->zero(), f->one(), f->element(124), f->one());
  RatFn x1(poly_of(*f, {42, 0, 1}), poly_of(*f, {21, 1}));
  RatFn g = compose(x1, sigma);
  Moebius tbar = match_moebius(g, x1);
  EXPECT_EQ(compose(tbar.as_ratfn(), x1), g);
}

TEST(MatchMoebius, RandomRelations) {
  std::mt19937_64 rng(10);
  auto f = Field::make(31);
  for (int t = 0; t < 20; ++t) {
    Moebius m = random_map(*f, rng);
    auto c = testing_support::random_elems(*f, 3, rng);
    RatFn h(Poly(*f, {c[0], c[1], f->one()}), Poly(*f, {c[2], f->one()}));
    if (h.degree() < 1) continue;
    RatFn g = compose(m.as_ratfn(), h);
    EXPECT_EQ(match_moebius(g, h), m);
  }
}

TEST(MoebiusJson, RoundTrip) {
  auto f = Field::make(127);
  Moebius sigma(f->zero(), f->one(), f->element(124), f->one());
  auto j = moebius_to_json(sigma);
  // Canonical form scales the first nonzero of a, c, b, d to 1; 1/124 = 42.
  EXPECT_EQ(j, nlohmann::json({0, 42, 1, 42}));
  EXPECT_EQ(moebius_from_json(*f, j), sigma);
  EXPECT_EQ(error_of([&] { moebius_from_json(*f, nlohmann::json({1, 2})); }), Errc::ParseError);
}

}  // namespace
}  // namespace gfft
