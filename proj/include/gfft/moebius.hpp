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

#include <cstdint>
#include <string>
#include <vector>

#include "gfft/gf.hpp"
#include "gfft/poly.hpp"
#include "json.hpp"

namespace gfft {

/// Element of PGL_2(q) acting as x -> (a x + b)/(c x + d). Stored with the
/// first nonzero entry in the order a, c, b, d scaled to 1.
class Moebius {
 public:
  Moebius(Elem a, Elem b, Elem c, Elem d);

  static Moebius identity(const Field& field);

  const Field& field() const { return *a_.field(); }
  Elem a() const { return a_; }
  Elem b() const { return b_; }
  Elem c() const { return c_; }
  Elem d() const { return d_; }
  Elem det() const { return a_ * d_ - b_ * c_; }
  bool is_identity() const;

  /// Composition as maps: (m1 * m2)(x) = m1(m2(x)).
  friend Moebius operator*(const Moebius& m1, const Moebius& m2);
  friend bool operator==(const Moebius& m1, const Moebius& m2) = default;
  Moebius inverse() const;
  Moebius pow(std::uint64_t e) const;

  /// Point action alpha -> (a alpha + b)/(c alpha + d).
  Place act(const Place& place) const;
  ExtValue act(const ExtValue& v) const;
  RatFn as_ratfn() const;

  std::string to_string() const;

 private:
  Elem a_, b_, c_, d_;
};

/// Least k >= 1 with m^k the identity.
std::uint64_t order(const Moebius& m);

/// g(m(x)).
RatFn compose(const RatFn& g, const Moebius& m);

struct SubgroupChain {
  Moebius generator;
  std::uint64_t generator_order;
  std::vector<unsigned> radices;
  /// level_generators[i-1] = tau_i generates G_i of order p_1...p_i.
  std::vector<Moebius> level_generators;

  std::uint64_t size(std::size_t level) const;
  /// All elements of G_level as powers of tau_level.
  std::vector<Moebius> elements(std::size_t level) const;
};

SubgroupChain subgroup_chain(const Moebius& m, const std::vector<unsigned>& radices);

/// Finds m with g = m(h) as rational functions.
Moebius match_moebius(const RatFn& g, const RatFn& h);

nlohmann::json moebius_to_json(const Moebius& m);
Moebius moebius_from_json(const Field& field, const nlohmann::json& j);

}  // namespace gfft
