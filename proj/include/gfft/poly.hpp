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

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfft/gf.hpp"
#include "json.hpp"

namespace gfft {

/// Degree of the zero polynomial.
inline constexpr long kMinusInfinity = LONG_MIN;

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
class Poly {
 public:
  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<Elem> coeffs);

  static Poly constant(Elem c);
  static Poly monomial(Elem c, std::size_t k);
  static Poly x(const Field& field);
  /// Builds x^q - x.
  static Poly frobenius_minus_x(const Field& field);

  const Field& field() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  long deg() const { return c_.empty() ? kMinusInfinity : long(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const;
  Elem lead() const;

  /// Horner evaluation.
  Elem operator()(Elem x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Elem s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly derivative() const;
  Poly pow(std::size_t e) const;
  /// Multiplies by x^k.
  Poly shift(std::size_t k) const;
  /// Coefficients below x^k.
  Poly truncate(std::size_t k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  const Field* field_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws ZeroInverse when gcd(a, m) != 1.
Poly inv_mod(const Poly& a, const Poly& m);
/// g(h(x)).
Poly compose(const Poly& g, const Poly& h);
/// Product of (x - r) over the given roots.
Poly from_roots(const Field& field, const std::vector<Elem>& roots);
/// Roots in F_q by exhaustive search, increasing code order.
std::vector<Elem> roots_in_field(const Poly& f);

nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const Field& field, const nlohmann::json& j);

/// Rational place of F_q(x): P_alpha or P_infinity.
class Place {
 public:
  static Place finite(Elem alpha) { return Place(alpha); }
  static Place infinity() { return Place(); }

  bool is_infinity() const { return !alpha_.has_value(); }
  Elem alpha() const;

  friend bool operator==(const Place& a, const Place& b) = default;
  friend bool operator<(const Place& a, const Place& b);

  std::string to_string() const;

 private:
  Place() = default;
  explicit Place(Elem a) : alpha_(a) {}
  std::optional<Elem> alpha_;
};

/// Value in F_q or the symbol infinity.
class ExtValue {
 public:
  static ExtValue val(Elem v) { return ExtValue(v); }
  static ExtValue infinite() { return ExtValue(); }

  bool is_infinite() const { return !v_.has_value(); }
  Elem value() const;
  /// The place of the same coordinate.
  Place as_place() const;

  friend bool operator==(const ExtValue& a, const ExtValue& b) = default;
  friend bool operator<(const ExtValue& a, const ExtValue& b);

  std::string to_string() const;

 private:
  ExtValue() = default;
  explicit ExtValue(Elem v) : v_(v) {}
  std::optional<Elem> v_;
};

/// Reduced rational function num/den with den monic and gcd(num, den) = 1.
class RatFn {
 public:
  explicit RatFn(const Poly& num);
  RatFn(const Poly& num, const Poly& den);

  static RatFn x(const Field& field) { return RatFn(Poly::x(field)); }

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// max(deg num, deg den): the degree of the map to the projective line.
  long degree() const;

  ExtValue eval(const Place& place) const;
  ExtValue eval(const ExtValue& v) const { return eval(v.as_place()); }

  RatFn inverse() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  struct Reduced {};
  RatFn(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// nu_P(g) at a rational place.
long valuation(const RatFn& g, const Place& place);
/// nu_P(g) at the finite place of the monic irreducible polynomial `pi`.
long valuation(const RatFn& g, const Poly& pi);
/// g((a x + b)/(c x + d)).
RatFn compose_moebius(const RatFn& g, Elem a, Elem b, Elem c, Elem d);
/// outer(inner(x)).
RatFn compose(const RatFn& outer, const RatFn& inner);

}  // namespace gfft
