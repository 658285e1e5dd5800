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

#include "gfft/afft.hpp"

namespace gfft {

namespace {

// f^p in characteristic p.
Poly frobenius_power(const Poly& f) {
  const Field& fl = f.field();
  const unsigned p = fl.p();
  std::vector<Elem> v(f.is_zero() ? 0 : (f.coeffs().size() - 1) * p + 1, fl.zero());
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) v[k * p] = f.coeffs()[k].pow(p);
  return Poly(fl, std::move(v));
}

// C(i, j) mod p for i, j < p.
std::vector<Elem> binomial_table(const Field& f) {
  const unsigned p = f.p();
  std::vector<Elem> t(std::size_t{p} * p, f.zero());
  for (unsigned i = 0; i < p; ++i) {
    t[i * p] = f.one();
    for (unsigned j = 1; j <= i; ++j) {
      t[i * p + j] = t[(i - 1) * p + j - 1] + (j < i ? t[(i - 1) * p + j] : f.zero());
    }
  }
  return t;
}

// Coefficients of a polynomial of degree < p^k, expanded into the layout
// out[m*p + t] = coefficient of x^t in a_m.
std::vector<Elem> expand_rec(std::vector<Elem> c, Elem alpha, std::size_t k,
                             const std::vector<Elem>& binom) {
  if (k <= 1) return c;
  const Field& f = *alpha.field();
  const std::size_t p = f.p();
  std::size_t s = 1;
  for (std::size_t i = 0; i + 2 < k; ++i) s *= p;
  const Elem a = alpha.pow(s);
  std::vector<Elem> apow(p, f.one());
  for (std::size_t i = 1; i < p; ++i) apow[i] = apow[i - 1] * a;

  // With X = x^s and U = (x^p - alpha x)^s = X^p - a X, rewrite
  // f = sum_{k',l} F_{k'p+l} X^l (U + a X)^{k'} as sum_j G_j U^j.
  std::vector<std::vector<Elem>> g(p, std::vector<Elem>(p * s, f.zero()));
  auto axpy = [&](std::vector<Elem>& dst, std::size_t slot, Elem coef, std::size_t src) {
    for (std::size_t t = 0; t < s; ++t) {
      const Elem v = c[src + t];
      if (!v.is_zero()) dst[slot * s + t] = dst[slot * s + t] + coef * v;
    }
  };
  for (std::size_t kk = 0; kk < p; ++kk) {
    for (std::size_t l = 0; l < p; ++l) {
      const std::size_t src = (kk * p + l) * s;
      bool nonzero = false;
      for (std::size_t t = 0; t < s && !nonzero; ++t) nonzero = !c[src + t].is_zero();
      if (!nonzero) continue;
      for (std::size_t j = 0; j <= kk; ++j) {
        const Elem bin = binom[kk * p + j];
        if (bin.is_zero()) continue;
        const Elem coef = kk == j ? bin : bin * apow[kk - j];
        const std::size_t e = kk - j + l;
        if (e < p) {
          axpy(g[j], e, coef, src);
        } else {
          // X^e = X^(e-p) U + a X^(e-p+1).
          axpy(g[j + 1], e - p, coef, src);
          axpy(g[j], e - p + 1, coef * a, src);
        }
      }
    }
  }
  std::vector<Elem> out(c.size(), f.zero());
  for (std::size_t j = 0; j < p; ++j) {
    const auto sub = expand_rec(std::move(g[j]), alpha, k - 1, binom);
    for (std::size_t m = 0; m < s; ++m) {
      for (std::size_t t = 0; t < p; ++t) out[(m + j * s) * p + t] = sub[m * p + t];
    }
  }
  return out;
}

// Horner in U = x^(p s) - a x^s over the blocks of `terms`.
Poly assemble_rec(const std::vector<Poly>& terms, std::size_t lo, std::size_t count,
                  Elem alpha) {
  const Field& f = *alpha.field();
  if (count == 1) return terms[lo];
  const std::size_t p = f.p();
  const std::size_t s = count / p;
  const Elem a = alpha.pow(s);
  Poly acc(f);
  for (std::size_t j = p; j-- > 0;) {
    acc = acc.shift(p * s) - a * acc.shift(s) + assemble_rec(terms, lo + j * s, s, alpha);
  }
  return acc;
}

std::vector<Elem> gather(const std::vector<Elem>& v, std::size_t k, std::size_t stride) {
  std::vector<Elem> out;
  for (std::size_t i = k; i < v.size(); i += stride) out.push_back(v[i]);
  return out;
}

std::vector<Elem> to_lch(const AddPlan& plan, std::size_t level, const Poly& g) {
  const Field& f = *plan.field;
  const std::size_t size = plan.n / [&] {
    std::size_t s = 1;
    for (std::size_t i = 0; i < level; ++i) s *= plan.p;
    return s;
  }();
  if (size == 1) return {g.coeff(0)};
  const std::size_t p = plan.p, terms_needed = size / p;
  auto terms = padic_expand(g, plan.betas[level]);
  std::vector<std::vector<Elem>> sub(p);
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<Elem> gk(terms_needed, f.zero());
    for (std::size_t m = 0; m < terms.size() && m < terms_needed; ++m) gk[m] = terms[m].coeff(k);
    sub[k] = to_lch(plan, level + 1, Poly(f, std::move(gk)));
  }
  std::vector<Elem> out(size, f.zero());
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t e = 0; e < terms_needed; ++e) out[k + p * e] = sub[k][e];
  }
  return out;
}

Poly to_standard(const AddPlan& plan, std::size_t level, const std::vector<Elem>& c) {
  const Field& f = *plan.field;
  if (c.size() == 1) return Poly::constant(c[0]);
  const std::size_t p = plan.p, m_count = c.size() / p;
  std::vector<Poly> g;
  for (std::size_t k = 0; k < p; ++k) g.push_back(to_standard(plan, level + 1, gather(c, k, p)));
  std::vector<Poly> terms;
  for (std::size_t m = 0; m < m_count; ++m) {
    std::vector<Elem> a(p, f.zero());
    for (std::size_t k = 0; k < p; ++k) a[k] = g[k].coeff(m);
    terms.emplace_back(f, std::move(a));
  }
  return padic_assemble(terms, plan.betas[level]);
}

}  // namespace

AddPlan add_plan(FieldPtr field, const std::vector<Elem>& basis) {
  const Field& f = *field;
  AddPlan plan;
  plan.field = field;
  plan.basis = basis;
  plan.p = f.p();
  plan.r = basis.size();
  if (plan.r > f.r()) throw Error(Errc::SubspaceTooLarge, "p^r exceeds q");
  plan.n = 1;
  for (std::size_t i = 0; i < plan.r; ++i) plan.n *= plan.p;
  const unsigned p = plan.p;

  plan.ells.push_back(Poly::x(f));
  for (std::size_t i = 1; i <= plan.r; ++i) {
    const Elem v = plan.ells.back()(basis[i - 1]);
    if (v.is_zero()) {
      throw Error(Errc::DependentBasis, "basis element " + std::to_string(i) +
                                            " lies in the span of the previous ones");
    }
    const Elem beta = v.pow(p - 1);
    plan.betas.push_back(beta);
    plan.ells.push_back(frobenius_power(plan.ells.back()) - beta * plan.ells.back());
  }

  plan.points.assign(plan.n, f.zero());
  std::size_t block = 1;
  for (std::size_t i = 0; i < plan.r; ++i) {
    for (std::size_t idx = block; idx < block * p; ++idx) {
      plan.points[idx] = plan.points[idx - block] + basis[i];
    }
    block *= p;
  }

  // l_i vanishes on W_i and nowhere else on W_r.
  block = 1;
  for (std::size_t i = 0; i <= plan.r; ++i) {
    for (std::size_t idx = 0; idx < plan.n; ++idx) {
      const bool in_wi = idx < block;
      if (ell_value(plan, i, plan.points[idx]).is_zero() != in_wi) {
        throw Error(Errc::DependentBasis, "l_" + std::to_string(i) + " kernel check failed");
      }
    }
    block *= p;
  }

  plan.tower.leaf_scale = f.one();
  std::size_t stride = 1;  // p^j
  for (std::size_t j = 0; j < plan.r; ++j) {
    TowerLevel L;
    L.radix = p;
    L.size = plan.n / stride;
    L.child_pos.resize(L.size);
    L.weights.resize(L.size * (p - 1));
    for (std::size_t s = 0; s < L.size; ++s) {
      L.child_pos[s] = s;
      const Elem w = ell_value(plan, j, plan.points[s * stride]);
      for (unsigned k = 0; k + 1 < p; ++k) L.weights[s * (p - 1) + k] = w;
    }
    for (std::size_t t = 0; t < L.size / p; ++t) {
      const Elem parent = ell_value(plan, j + 1, plan.points[t * stride * p]);
      for (unsigned c = 0; c < p; ++c) {
        const Elem w = L.weights[(t * p + c) * (p - 1)];
        if (w.pow(p) - plan.betas[j] * w != parent) {
          throw Error(Errc::InvalidArgument, "fiber constancy violated");
        }
      }
    }
    build_local_inverses(L, f);
    plan.tower.levels.push_back(std::move(L));
    stride *= p;
  }
  return plan;
}

Elem ell_value(const AddPlan& plan, std::size_t i, Elem w) {
  for (std::size_t k = 0; k < i; ++k) w = w.pow(plan.p) - plan.betas[k] * w;
  return w;
}

EvalVec add_fft(const AddPlan& plan, const CoeffVec& coeffs) {
  require_basis(coeffs, Basis::Lch);
  require_length(coeffs.coeffs.size(), plan.n, "add_fft");
  EvalVec out;
  for (auto p : plan.points) out.points.push_back(Place::finite(p));
  out.values = plan.tower.forward(coeffs.coeffs);
  return out;
}

CoeffVec add_ifft(const AddPlan& plan, const EvalVec& values) {
  require_length(values.values.size(), plan.n, "add_ifft");
  return {Basis::Lch, plan.tower.inverse(values.values, plan.field->zero())};
}

std::vector<Poly> padic_expand(const Poly& f, Elem alpha) {
  const Field& fl = f.field();
  const std::size_t p = fl.p();
  if (f.deg() < static_cast<long>(p)) return {f};
  std::size_t N = p, k = 1;
  while (N <= static_cast<std::size_t>(f.deg())) {
    N *= p;
    ++k;
  }
  std::vector<Elem> c(N, fl.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i] = f.coeffs()[i];
  const auto flat = expand_rec(std::move(c), alpha, k, binomial_table(fl));
  std::vector<Poly> out;
  for (std::size_t m = 0; m < N / p; ++m) {
    out.emplace_back(fl, std::vector<Elem>(flat.begin() + m * p, flat.begin() + (m + 1) * p));
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

Poly padic_assemble(const std::vector<Poly>& terms, Elem alpha) {
  const Field& f = *alpha.field();
  if (terms.empty()) return Poly(f);
  std::size_t count = 1;
  while (count < terms.size()) count *= f.p();
  std::vector<Poly> padded = terms;
  padded.resize(count, Poly(f));
  return assemble_rec(padded, 0, count, alpha);
}

CoeffVec standard_to_lch(const AddPlan& plan, const CoeffVec& f) {
  require_basis(f, Basis::Standard);
  const Poly g(*plan.field, f.coeffs);
  if (g.deg() >= static_cast<long>(plan.n)) {
    throw Error(Errc::DegreeTooLarge, "degree must be < n = " + std::to_string(plan.n));
  }
  return {Basis::Lch, to_lch(plan, 0, g)};
}

CoeffVec lch_to_standard(const AddPlan& plan, const CoeffVec& coeffs) {
  require_basis(coeffs, Basis::Lch);
  require_length(coeffs.coeffs.size(), plan.n, "lch_to_standard");
  const Poly g = to_standard(plan, 0, coeffs.coeffs);
  std::vector<Elem> out(plan.n, plan.field->zero());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] = g.coeffs()[i];
  return {Basis::Standard, out};
}

nlohmann::json add_plan_to_json(const AddPlan& plan) {
  nlohmann::json basis = nlohmann::json::array(), betas = nlohmann::json::array(),
                 pts = nlohmann::json::array(), ells = nlohmann::json::array();
  for (auto b : plan.basis) basis.push_back(elem_to_json(b));
  for (auto b : plan.betas) betas.push_back(elem_to_json(b));
  for (auto p : plan.points) pts.push_back(elem_to_json(p));
  for (const auto& l : plan.ells) ells.push_back(l.to_string());
  return {{"case", "add"}, {"field", field_to_json(*plan.field)},
          {"basis", basis}, {"n", plan.n},
          {"betas", betas}, {"ells", ells},
          {"points", pts}};
}

AddPlan add_plan_from_json(const nlohmann::json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  std::vector<Elem> basis;
  for (const auto& b : j.at("basis")) basis.push_back(elem_from_json(*f, b));
  return add_plan(f, basis);
}

}  // namespace gfft
