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

#include <algorithm>
#include <string>
#include <tuple>

namespace gfft {

namespace {

thread_local OpCounter* tl_counter = nullptr;

inline void count_add() {
  if (tl_counter) ++tl_counter->adds;
}
inline void count_mul() {
  if (tl_counter) ++tl_counter->muls;
}
inline void count_inv() {
  if (tl_counter) ++tl_counter->invs;
}

const Field& common_field(Elem a, Elem b) {
  if (a.field() != nullptr && a.field() == b.field()) return *a.field();
  if (a.field() == nullptr || b.field() == nullptr ||
      !a.field()->same_as(*b.field())) {
    throw Error(Errc::MixedFields, "operands belong to different fields");
  }
  return *a.field();
}

const Field& own_field(Elem a) {
  if (a.field() == nullptr) {
    throw Error(Errc::MixedFields, "element has no field");
  }
  return *a.field();
}

// Dense polynomials over F_p as coefficient vectors, used before a Field
// exists (modulus search and irreducibility checks).
using Raw = std::vector<std::uint32_t>;

void raw_trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mod(Raw a, const Raw& m, std::uint32_t p) {
  raw_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lead = [&] {
    std::uint64_t r = 1, b = m.back(), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > dm) {
    const std::uint64_t f = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - f) * m[i]) % p);
    }
    raw_trim(a);
  }
  return a;
}

Raw raw_mulmod(const Raw& a, const Raw& b, const Raw& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Raw out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return raw_mod(std::move(out), m, p);
}

Raw raw_gcd(Raw a, Raw b, std::uint32_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    Raw r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool raw_irreducible(const Raw& f, std::uint32_t p) {
  const std::size_t r = f.size() - 1;
  if (r <= 1) return r == 1;
  Raw h = {0, 1};
  for (std::size_t i = 1; i <= r / 2; ++i) {
    // h <- h^p mod f
    Raw acc = {1}, base = h;
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = raw_mulmod(acc, base, f, p);
      base = raw_mulmod(base, base, f, p);
    }
    h = acc;
    Raw d = h;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    if (raw_gcd(f, d, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

CountingScope::CountingScope(OpCounter& counter) : prev_(tl_counter) {
  tl_counter = &counter;
}

CountingScope::~CountingScope() { tl_counter = prev_; }

OpCounter* detail::active_counter() noexcept { return tl_counter; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  if (r_ == 1) return;
  // Log tables keyed by the least generator found with schoolbook products.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](std::uint32_t g, std::uint64_t e) {
    std::uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = slow_mul(acc, g);
      g = slow_mul(g, g);
      e >>= 1;
    }
    return acc;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto l : factors) {
      if (slow_pow(g, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = slow_mul(cur, gen);
  }
}

FieldPtr Field::make(std::uint32_t p, unsigned r,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) {
    throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  }
  if (r == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31)) {
      throw Error(Errc::InvalidArgument, "field too large (q > 2^31)");
    }
  }
  if (r > 1 && q > (std::uint64_t{1} << 24)) {
    throw Error(Errc::InvalidArgument, "extension field too large (q > 2^24)");
  }
  std::vector<std::uint32_t> m;
  if (r > 1) {
    if (modulus) {
      m = *modulus;
      if (m.size() == r) m.push_back(1);
      if (m.size() != r + 1 || m.back() != 1) {
        throw Error(Errc::ReducibleModulus, "modulus must be monic of degree r");
      }
      for (auto c : m) {
        if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient >= p");
      }
      if (!raw_irreducible(m, p)) {
        throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
      }
    } else {
      std::uint64_t low_count = q;
      for (std::uint64_t code = 0; code < low_count; ++code) {
        Raw cand(r + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < r; ++i) {
          cand[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        cand[r] = 1;
        if (raw_irreducible(cand, p)) {
          m = cand;
          break;
        }
      }
    }
  } else if (modulus && !modulus->empty()) {
    throw Error(Errc::InvalidArgument, "prime fields take no modulus");
  }
  return std::make_shared<const Field>(p, r, std::move(m));
}

Elem Field::element(std::uint32_t code) const {
  if (code >= q_) throw Error(Errc::InvalidArgument, "element code out of range");
  return Elem(this, code);
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return Elem(this, static_cast<std::uint32_t>(m));
}

std::vector<std::uint32_t> Field::digits(Elem e) const {
  std::vector<std::uint32_t> out(r_);
  std::uint32_t c = e.code();
  for (unsigned i = 0; i < r_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > r_) throw Error(Errc::InvalidArgument, "too many digits");
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error(Errc::InvalidArgument, "digit >= p");
    code = code * p_ + digits[i];
  }
  return Elem(this, static_cast<std::uint32_t>(code));
}

bool Field::same_as(const Field& other) const {
  return this == &other ||
         (p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_);
}

std::uint32_t Field::add_raw(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t Field::neg_raw(std::uint32_t a) const {
  if (r_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

std::uint32_t Field::sub_raw(std::uint32_t a, std::uint32_t b) const {
  return add_raw(a, neg_raw(b));
}

std::uint32_t Field::mul_raw(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  if (a == 0 || b == 0) return 0;
  std::uint64_t l = std::uint64_t{log_[a]} + log_[b];
  if (l >= q_ - 1) l -= q_ - 1;
  return exp_[l];
}

std::uint32_t Field::inv_raw(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero");
  if (r_ == 1) {
    std::int64_t t = 0, nt = 1, rr = p_, nr = a;
    while (nr != 0) {
      std::int64_t quo = rr / nr;
      std::tie(t, nt) = std::make_pair(nt, t - quo * nt);
      std::tie(rr, nr) = std::make_pair(nr, rr - quo * nr);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
  Raw x(r_), y(r_);
  for (unsigned i = 0; i < r_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  Raw prod = raw_mulmod(x, y, modulus_, p_);
  std::uint64_t code = 0;
  for (std::size_t i = prod.size(); i-- > 0;) code = code * p_ + prod[i];
  return static_cast<std::uint32_t>(code);
}

Elem Elem::operator-() const {
  const Field& f = own_field(*this);
  count_add();
  return Elem(&f, f.neg_raw(code_));
}

Elem operator+(Elem a, Elem b) {
  const Field& f = common_field(a, b);
  count_add();
  return Elem(&f, f.add_raw(a.code_, b.code_));
}

Elem operator-(Elem a, Elem b) {
  const Field& f = common_field(a, b);
  count_add();
  return Elem(&f, f.sub_raw(a.code_, b.code_));
}

Elem operator*(Elem a, Elem b) {
  const Field& f = common_field(a, b);
  count_mul();
  return Elem(&f, f.mul_raw(a.code_, b.code_));
}

Elem operator/(Elem a, Elem b) { return a * b.inv(); }

Elem Elem::inv() const {
  const Field& f = own_field(*this);
  count_inv();
  return Elem(&f, f.inv_raw(code_));
}

Elem Elem::pow(std::uint64_t e) const {
  const Field& f = own_field(*this);
  Elem acc = f.one();
  Elem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool operator==(Elem a, Elem b) {
  if (a.code_ != b.code_) return false;
  if (a.field_ == b.field_) return true;
  return a.field_ && b.field_ && a.field_->same_as(*b.field_);
}

std::uint64_t multiplicative_order(Elem g) {
  if (g.is_zero()) throw Error(Errc::ZeroInverse, "order of zero");
  const std::uint64_t group = own_field(g).q() - 1;
  std::uint64_t ord = group;
  for (auto l : prime_factors(group)) {
    while (ord % l == 0 && g.pow(ord / l).is_one()) ord /= l;
  }
  return ord;
}

Elem find_primitive_element(const Field& field) {
  const std::uint64_t group = field.q() - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t code = 1; code < field.q(); ++code) {
    Elem g = field.element(code);
    bool ok = true;
    for (auto l : factors) {
      if (g.pow(group / l).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(Errc::InvalidArgument, "no primitive element");
}

bool is_primitive_quadratic(Elem a, Elem b) {
  const Field& f = common_field(a, b);
  if (b.is_zero()) return false;
  // Arithmetic in F_q[t]/(t^2 + a t + b) on pairs (u0, u1) = u0 + u1 t.
  using Pair = std::pair<Elem, Elem>;
  auto mul = [&](Pair u, Pair v) {
    Elem c0 = u.first * v.first;
    Elem c1 = u.first * v.second + u.second * v.first;
    Elem c2 = u.second * v.second;
    return Pair{c0 - c2 * b, c1 - c2 * a};
  };
  auto power = [&](Pair base, std::uint64_t e) {
    Pair acc{f.one(), f.zero()};
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  };
  const std::uint64_t group = std::uint64_t{f.q()} * f.q() - 1;
  const Pair t{f.zero(), f.one()};
  // A unit of order q^2-1 exists only when the quotient ring is the field
  // F_{q^2}; the split and ramified rings have unit groups of order (q-1)^2
  // and q(q-1). So t of exact order q^2-1 also certifies irreducibility.
  const Pair full = power(t, group);
  if (!full.first.is_one() || !full.second.is_zero()) return false;
  for (auto l : prime_factors(group)) {
    Pair v = power(t, group / l);
    if (v.first.is_one() && v.second.is_zero()) return false;
  }
  return true;
}

std::pair<Elem, Elem> find_primitive_quadratic(const Field& field) {
  for (std::uint32_t ca = 0; ca < field.q(); ++ca) {
    for (std::uint32_t cb = 1; cb < field.q(); ++cb) {
      Elem a = field.element(ca), b = field.element(cb);
      if (is_primitive_quadratic(a, b)) return {a, b};
    }
  }
  throw Error(Errc::PrimitivityFailure, "no primitive quadratic found");
}

nlohmann::json elem_to_json(Elem e) {
  const Field& f = own_field(e);
  if (f.r() == 1) return e.code();
  return f.digits(e);
}

Elem elem_from_json(const Field& field, const nlohmann::json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (field.r() == 1) {
      if (v < 0 || v >= field.p()) {
        throw Error(Errc::ParseError, "residue out of range: " + j.dump());
      }
      return field.element(static_cast<std::uint32_t>(v));
    }
    if (v < 0 || v >= field.p()) {
      throw Error(Errc::ParseError, "scalar out of prime subfield: " + j.dump());
    }
    return field.element(static_cast<std::uint32_t>(v));
  }
  if (j.is_array()) {
    std::vector<std::uint32_t> d;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw Error(Errc::ParseError, "bad digit");
      const auto v = x.get<std::int64_t>();
      if (v < 0 || v >= field.p()) throw Error(Errc::ParseError, "digit out of range");
      d.push_back(static_cast<std::uint32_t>(v));
    }
    return field.from_digits(d);
  }
  throw Error(Errc::ParseError, "field element must be an integer or list");
}

nlohmann::json field_to_json(const Field& field) {
  nlohmann::json j = {{"p", field.p()}, {"r", field.r()}};
  if (field.r() > 1) j["modulus"] = field.modulus();
  return j;
}

FieldPtr field_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto r = j.value("r", 1u);
    std::optional<std::vector<std::uint32_t>> m;
    if (j.contains("modulus")) m = j.at("modulus").get<std::vector<std::uint32_t>>();
    return Field::make(p, r, m);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace gfft
