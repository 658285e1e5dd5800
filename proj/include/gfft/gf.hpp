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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gfft/error.hpp"
#include "json.hpp"

namespace gfft {

/// Field-operation tallies for one measurement scope.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;

  std::uint64_t total() const { return adds + muls + invs; }
};

/// Routes the counts of field arithmetic performed on the calling thread
/// into `counter` for the lifetime of the scope. Scopes nest; the innermost
/// one receives the counts.
class CountingScope {
 public:
  explicit CountingScope(OpCounter& counter);
  ~CountingScope();
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OpCounter* prev_;
};

namespace detail {
OpCounter* active_counter() noexcept;
}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of F_q. Encoded as an integer code: the residue when r = 1,
/// otherwise sum_i c_i p^i over the coefficients of the polynomial basis.
/// An Elem refers to its Field by pointer; the Field must outlive it.
class Elem {
 public:
  Elem() = default;
  Elem(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  const Field* field() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  Elem operator-() const;
  Elem inv() const;
  Elem pow(std::uint64_t e) const;

  friend Elem operator+(Elem a, Elem b);
  friend Elem operator-(Elem a, Elem b);
  friend Elem operator*(Elem a, Elem b);
  friend Elem operator/(Elem a, Elem b);
  Elem& operator+=(Elem b) { return *this = *this + b; }
  Elem& operator-=(Elem b) { return *this = *this - b; }
  Elem& operator*=(Elem b) { return *this = *this * b; }

  friend bool operator==(Elem a, Elem b);
  friend std::strong_ordering operator<=>(Elem a, Elem b) {
    return a.code_ <=> b.code_;
  }

 private:
  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

class Field {
 public:
  /// Builds F_{p^r}. With no modulus and r > 1 the least monic irreducible
  /// polynomial of degree r is used (ordered by its integer code).
  /// `modulus` lists the low coefficients c_0..c_{r-1} or all r+1 of them.
  static FieldPtr make(std::uint32_t p, unsigned r = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = {});

  std::uint32_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus c_0..c_r; empty when r = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(this, 0); }
  Elem one() const { return Elem(this, 1); }
  Elem element(std::uint32_t code) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  std::vector<std::uint32_t> digits(Elem e) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

  bool same_as(const Field& other) const;

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_raw(std::uint32_t a) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_raw(std::uint32_t a) const;

  Field(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  unsigned r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t multiplicative_order(Elem g);
Elem find_primitive_element(const Field& field);
/// True when x^2 + a x + b is irreducible over F_q with a root of order q^2-1.
bool is_primitive_quadratic(Elem a, Elem b);
/// Least (a, b) in lexicographic code order with x^2 + a x + b primitive.
std::pair<Elem, Elem> find_primitive_quadratic(const Field& field);

nlohmann::json elem_to_json(Elem e);
Elem elem_from_json(const Field& field, const nlohmann::json& j);
nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

}  // namespace gfft
