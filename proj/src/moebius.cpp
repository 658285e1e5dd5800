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

#include "gfft/matrix.hpp"

namespace gfft {

Moebius::Moebius(Elem a, Elem b, Elem c, Elem d) : a_(a), b_(b), c_(c), d_(d) {
  if (det().is_zero()) throw Error(Errc::InvalidArgument, "degenerate Moebius map");
  const Elem lead = !a_.is_zero() ? a_ : !c_.is_zero() ? c_ : b_;
  if (!lead.is_one()) {
    const Elem s = lead.inv();
    a_ = a_ * s;
    b_ = b_ * s;
    c_ = c_ * s;
    d_ = d_ * s;
  }
}

Moebius Moebius::identity(const Field& field) {
  return Moebius(field.one(), field.zero(), field.zero(), field.one());
}

bool Moebius::is_identity() const {
  return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}

Moebius operator*(const Moebius& m1, const Moebius& m2) {
  return Moebius(m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
                 m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_);
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

Moebius Moebius::pow(std::uint64_t e) const {
  Moebius acc = identity(field());
  Moebius base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Place Moebius::act(const Place& place) const {
  if (place.is_infinity()) {
    if (c_.is_zero()) return Place::infinity();
    return Place::finite(a_ / c_);
  }
  const Elem x = place.alpha();
  const Elem den = c_ * x + d_;
  if (den.is_zero()) return Place::infinity();
  return Place::finite((a_ * x + b_) / den);
}

ExtValue Moebius::act(const ExtValue& v) const {
  const Place p = act(v.as_place());
  return p.is_infinity() ? ExtValue::infinite() : ExtValue::val(p.alpha());
}

RatFn Moebius::as_ratfn() const {
  const Field& f = field();
  return RatFn(Poly(f, {b_, a_}), Poly(f, {d_, c_}));
}

std::string Moebius::to_string() const {
  auto s = [](Elem e) { return Poly::constant(e).to_string(); };
  return "[" + s(a_) + "," + s(b_) + "," + s(c_) + "," + s(d_) + "]";
}

std::uint64_t order(const Moebius& m) {
  Moebius cur = m;
  std::uint64_t k = 1;
  const unsigned __int128 q = m.field().q();
  const unsigned __int128 bound = q * (q - 1) * (q + 1);
  while (!cur.is_identity()) {
    cur = cur * m;
    if (++k > bound) throw Error(Errc::InvalidArgument, "order exceeds |PGL_2(q)|");
  }
  return k;
}

RatFn compose(const RatFn& g, const Moebius& m) {
  return compose_moebius(g, m.a(), m.b(), m.c(), m.d());
}

std::uint64_t SubgroupChain::size(std::size_t level) const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < level; ++i) s *= radices[i];
  return s;
}

std::vector<Moebius> SubgroupChain::elements(std::size_t level) const {
  const Moebius gen = level == 0 ? Moebius::identity(generator.field())
                                 : level_generators[level - 1];
  std::vector<Moebius> out{Moebius::identity(generator.field())};
  for (std::uint64_t k = 1; k < size(level); ++k) out.push_back(out.back() * gen);
  return out;
}

SubgroupChain subgroup_chain(const Moebius& m, const std::vector<unsigned>& radices) {
  const std::uint64_t ord = order(m);
  std::uint64_t n = 1;
  for (auto p : radices) {
    if (p < 2) throw Error(Errc::InvalidArgument, "radices must be >= 2");
    n *= p;
    if (ord % n != 0) {
      throw Error(Errc::RadixProductNotDividingOrder,
                  "radix product does not divide the order " + std::to_string(ord));
    }
  }
  SubgroupChain chain{m, ord, radices, {}};
  std::uint64_t g = 1;
  for (auto p : radices) {
    g *= p;
    chain.level_generators.push_back(m.pow(ord / g));
  }
  return chain;
}

Moebius match_moebius(const RatFn& g, const RatFn& h) {
  const Field& f = g.field();
  // num_g (c num_h + d den_h) - den_g (a num_h + b den_h) = 0, unknowns (a, b, c, d).
  const Poly cols[4] = {-(g.den() * h.num()), -(g.den() * h.den()), g.num() * h.num(),
                        g.num() * h.den()};
  std::size_t rows = 1;
  for (const auto& c : cols) rows = std::max<std::size_t>(rows, c.coeffs().size());
  Matrix sys(f, rows, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < cols[j].coeffs().size(); ++i) sys(i, j) = cols[j].coeffs()[i];
  }
  for (const auto& v : nullspace(sys)) {
    if ((v[0] * v[3] - v[1] * v[2]).is_zero()) continue;
    Moebius m(v[0], v[1], v[2], v[3]);
    if (compose(m.as_ratfn(), h) == g) return m;
  }
  throw Error(Errc::NoMoebiusRelation, "no Moebius map relates the two functions");
}

nlohmann::json moebius_to_json(const Moebius& m) {
  return {elem_to_json(m.a()), elem_to_json(m.b()), elem_to_json(m.c()), elem_to_json(m.d())};
}

Moebius moebius_from_json(const Field& field, const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::ParseError, "Moebius map needs 4 entries");
  return Moebius(elem_from_json(field, j[0]), elem_from_json(field, j[1]),
                 elem_from_json(field, j[2]), elem_from_json(field, j[3]));
}

}  // namespace gfft
