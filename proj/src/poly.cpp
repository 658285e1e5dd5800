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

#include "gfft/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gfft {

namespace {

void check_same(const Field& a, const Field& b) {
  if (!a.same_as(b)) throw Error(Errc::MixedFields, "polynomials over different fields");
}

std::string elem_string(Elem e) {
  const Field& f = *e.field();
  if (f.r() == 1) return std::to_string(e.code());
  std::string s = "(";
  auto d = f.digits(e);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

// p(s x + t).
Poly subst_affine(const Poly& p, Elem s, Elem t) {
  const Field& f = p.field();
  Poly lin(f, {t, s});
  Poly h(f);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    h = h * lin + Poly::constant(p.coeffs()[k]);
  }
  return h;
}

// x^d p(1/x) for d >= deg p.
Poly reverse(const Poly& p, std::size_t d) {
  std::vector<Elem> c(d + 1, p.field().zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[d - i] = p.coeffs()[i];
  return Poly(p.field(), std::move(c));
}

}  // namespace

Poly::Poly(const Field& field, std::vector<Elem> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (const auto& e : c_) {
    if (e.field() == nullptr || !e.field()->same_as(field)) {
      throw Error(Errc::MixedFields, "coefficient from another field");
    }
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Elem c) { return Poly(*c.field(), {c}); }

Poly Poly::monomial(Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, c.field()->zero());
  v[k] = c;
  return Poly(*c.field(), std::move(v));
}

Poly Poly::x(const Field& field) { return monomial(field.one(), 1); }

Poly Poly::frobenius_minus_x(const Field& field) {
  return monomial(field.one(), field.q()) - x(field);
}

Elem Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : field_->zero();
}

Elem Poly::lead() const {
  if (c_.empty()) throw Error(Errc::DivisionByZeroPoly, "leading coefficient of zero");
  return c_.back();
}

Elem Poly::operator()(Elem x) const {
  Elem acc = field_->zero();
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = k + 1 == c_.size() ? c_[k] : acc * x + c_[k];
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Elem> v;
  v.reserve(c_.size());
  for (auto e : c_) v.push_back(-e);
  return Poly(*field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same(*a.field_, *b.field_);
  const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  std::vector<Elem> v = big;
  for (std::size_t i = 0; i < small.size(); ++i) v[i] = v[i] + small[i];
  return Poly(*a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same(*a.field_, *b.field_);
  if (a.c_.empty() || b.c_.empty()) return Poly(*a.field_);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return Poly(*a.field_, std::move(v));
}

Poly operator*(Elem s, const Poly& a) {
  std::vector<Elem> v;
  v.reserve(a.c_.size());
  for (auto e : a.c_) v.push_back(s * e);
  return Poly(*a.field_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return lead().inv() * *this;
}

Poly Poly::derivative() const {
  std::vector<Elem> v;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(field_->from_int(static_cast<std::int64_t>(i % field_->p())) * c_[i]);
  }
  return Poly(*field_, std::move(v));
}

Poly Poly::pow(std::size_t e) const {
  Poly acc = constant(field_->one());
  Poly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Poly Poly::shift(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> v(k, field_->zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(*field_, std::move(v));
}

Poly Poly::truncate(std::size_t k) const {
  std::vector<Elem> v(c_.begin(), c_.begin() + std::min(k, c_.size()));
  return Poly(*field_, std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += "+";
    const bool unit = c_[k].is_one();
    if (k == 0) {
      s += elem_string(c_[k]);
    } else {
      if (!unit) s += elem_string(c_[k]);
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_same(a.field(), b.field());
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.deg() < b.deg()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> quo(r.size() - db, f.zero());
  const Elem inv_lead = bc.back().inv();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const Elem t = r[k] * inv_lead;
    quo[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - t * bc[i];
  }
  r.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly inv_mod(const Poly& a, const Poly& m) {
  const Field& f = m.field();
  Poly r0 = m, r1 = a % m;
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [quo, rem] = divrem(r0, r1);
    Poly t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.deg() != 0) throw Error(Errc::ZeroInverse, "polynomial not invertible modulo m");
  return (r0.lead().inv() * t0) % m;
}

Poly compose(const Poly& g, const Poly& h) {
  Poly acc(g.field());
  for (std::size_t k = g.coeffs().size(); k-- > 0;) {
    acc = acc * h + Poly::constant(g.coeffs()[k]);
  }
  return acc;
}

Poly from_roots(const Field& field, const std::vector<Elem>& roots) {
  Poly acc = Poly::constant(field.one());
  for (auto r : roots) acc = acc * Poly(field, {-r, field.one()});
  return acc;
}

std::vector<Elem> roots_in_field(const Poly& f) {
  std::vector<Elem> out;
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "roots of the zero polynomial");
  for (std::uint32_t c = 0; c < f.field().q(); ++c) {
    Elem a = f.field().element(c);
    if (f(a).is_zero()) out.push_back(a);
  }
  return out;
}

nlohmann::json poly_to_json(const Poly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto c : f.coeffs()) arr.push_back(elem_to_json(c));
  return {{"coeffs", arr}};
}

Poly poly_from_json(const Field& field, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(Errc::ParseError, "polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Elem> v;
  for (const auto& c : j["coeffs"]) v.push_back(elem_from_json(field, c));
  return Poly(field, std::move(v));
}

Elem Place::alpha() const {
  if (!alpha_) throw Error(Errc::InvalidArgument, "the infinite place has no coordinate");
  return *alpha_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  return a.alpha().code() < b.alpha().code();
}

std::string Place::to_string() const {
  return is_infinity() ? "inf" : elem_string(*alpha_);
}

Elem ExtValue::value() const {
  if (!v_) throw Error(Errc::InvalidArgument, "value is infinite");
  return *v_;
}

Place ExtValue::as_place() const {
  return v_ ? Place::finite(*v_) : Place::infinity();
}

bool operator<(const ExtValue& a, const ExtValue& b) {
  return a.as_place() < b.as_place();
}

std::string ExtValue::to_string() const {
  return v_ ? elem_string(*v_) : "inf";
}

RatFn::RatFn(const Poly& num) : num_(num), den_(Poly::constant(num.field().one())) {}

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  check_same(num.field(), den.field());
  if (den.is_zero()) throw Error(Errc::DivisionByZeroPoly, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num.field().one());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = divrem(num_, g).first;
    den_ = divrem(den_, g).first;
  }
  const Elem s = den_.lead().inv();
  num_ = s * num_;
  den_ = s * den_;
}

long RatFn::degree() const { return std::max(num_.deg(), den_.deg()); }

ExtValue RatFn::eval(const Place& place) const {
  const Field& f = field();
  if (place.is_infinity()) {
    if (num_.is_zero()) return ExtValue::val(f.zero());
    if (num_.deg() > den_.deg()) return ExtValue::infinite();
    if (num_.deg() < den_.deg()) return ExtValue::val(f.zero());
    return ExtValue::val(num_.lead() / den_.lead());
  }
  const Elem d = den_(place.alpha());
  if (d.is_zero()) return ExtValue::infinite();
  return ExtValue::val(num_(place.alpha()) / d);
}

RatFn RatFn::inverse() const {
  if (num_.is_zero()) throw Error(Errc::ZeroFunction, "inverse of the zero function");
  return RatFn(den_, num_);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  return a + RatFn(-b.num_, b.den_, RatFn::Reduced{});
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

bool operator==(const RatFn& a, const RatFn& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RatFn::to_string(const std::string& var) const {
  if (den_.deg() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

long multiplicity(Poly p, const Poly& pi) {
  long m = 0;
  while (!p.is_zero()) {
    auto [quo, rem] = divrem(p, pi);
    if (!rem.is_zero()) break;
    p = std::move(quo);
    ++m;
  }
  return m;
}

}  // namespace

long valuation(const RatFn& g, const Place& place) {
  if (g.is_zero()) throw Error(Errc::ZeroFunction, "valuation of the zero function");
  if (place.is_infinity()) return g.den().deg() - g.num().deg();
  const Field& f = g.field();
  const Poly pi(f, {-place.alpha(), f.one()});
  return multiplicity(g.num(), pi) - multiplicity(g.den(), pi);
}

long valuation(const RatFn& g, const Poly& pi) {
  if (g.is_zero()) throw Error(Errc::ZeroFunction, "valuation of the zero function");
  if (pi.deg() < 1) throw Error(Errc::InvalidArgument, "place polynomial must be nonconstant");
  return multiplicity(g.num(), pi) - multiplicity(g.den(), pi);
}

RatFn compose_moebius(const RatFn& g, Elem a, Elem b, Elem c, Elem d) {
  if ((a * d - b * c).is_zero()) {
    throw Error(Errc::InvalidArgument, "degenerate Moebius map");
  }
  if (c.is_zero()) {
    const Elem s = a / d, t = b / d;
    return RatFn(subst_affine(g.num(), s, t), subst_affine(g.den(), s, t));
  }
  // With z = c x + d: a x + b = al z + be, so P((a x + b)/(c x + d)) z^D
  // is the degree-D reversal of P(al + be w) evaluated at z.
  const long dg = g.degree();
  const Elem al = a / c;
  const Elem be = b - a * d / c;
  auto homog = [&](const Poly& p) {
    Poly r = reverse(subst_affine(p, be, al), static_cast<std::size_t>(dg));
    return subst_affine(r, c, d);
  };
  return RatFn(homog(g.num()), homog(g.den()));
}

RatFn compose(const RatFn& outer, const RatFn& inner) {
  const Field& f = outer.field();
  const long d = outer.degree();
  if (d <= 0) return outer;
  const Poly& n = inner.num();
  const Poly& m = inner.den();
  std::vector<Poly> npow{Poly::constant(f.one())}, mpow{Poly::constant(f.one())};
  for (long k = 1; k <= d; ++k) {
    npow.push_back(npow.back() * n);
    mpow.push_back(mpow.back() * m);
  }
  auto homog = [&](const Poly& p) {
    Poly acc(f);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      acc = acc + p.coeffs()[k] * (npow[k] * mpow[static_cast<std::size_t>(d) - k]);
    }
    return acc;
  };
  return RatFn(homog(outer.num()), homog(outer.den()));
}

}  // namespace gfft
