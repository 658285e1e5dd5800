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

#include "gfft/mfft.hpp"

namespace gfft {

MultPlan mult_plan(FieldPtr field, const std::vector<unsigned>& radices,
                   std::optional<Elem> beta) {
  const Field& f = *field;
  std::size_t n = 1;
  for (auto p : radices) {
    if (p < 2) throw Error(Errc::InvalidArgument, "radices must be >= 2");
    n *= p;
    if ((f.q() - 1) % n != 0) {
      throw Error(Errc::RadixNotDividingGroupOrder,
                  "radix product does not divide q-1 = " + std::to_string(f.q() - 1));
    }
  }
  MultPlan plan;
  plan.field = field;
  plan.radices = radices;
  plan.n = n;
  plan.beta = beta.value_or(f.one());
  if (plan.beta.is_zero()) throw Error(Errc::InvalidArgument, "shift beta must be nonzero");
  plan.alpha = find_primitive_element(f);
  plan.omega = plan.alpha.pow((f.q() - 1) / n);
  plan.points.reserve(n);
  Elem cur = plan.beta;
  for (std::size_t j = 0; j < n; ++j) {
    plan.points.push_back(cur);
    cur = cur * plan.omega;
  }

  plan.tower.leaf_scale = f.one();
  std::size_t group = 1;  // |G_j|
  for (std::size_t j = 0; j < radices.size(); ++j) {
    const unsigned p = radices[j];
    const std::size_t m = n / group, mp = m / p;
    const Elem base = plan.beta.pow(group);
    const Elem step = plan.omega.pow(group);
    const Elem parent_step = plan.omega.pow(group * p);
    const Elem parent_base = plan.beta.pow(group * p);
    TowerLevel L;
    L.radix = p;
    L.size = m;
    L.child_pos.resize(m);
    L.weights.resize(m * (p - 1));
    Elem v = base;
    for (std::size_t s = 0; s < m; ++s) {
      for (unsigned k = 0; k + 1 < p; ++k) L.weights[s * (p - 1) + k] = v;
      v = v * step;
    }
    const Elem zeta = plan.omega.pow(n / p);
    const Elem inv_p = f.from_int(p).inv();
    L.inv_local.resize(mp * p * p);
    Elem parent = parent_base;
    for (std::size_t t = 0; t < mp; ++t) {
      for (unsigned c = 0; c < p; ++c) {
        const std::size_t pos = t + c * mp;
        L.child_pos[t * p + c] = pos;
        if (L.weights[pos * (p - 1)].pow(p) != parent) {
          throw Error(Errc::InvalidArgument, "fiber constancy violated");
        }
      }
      const Elem w0_inv = L.weights[t * (p - 1)].inv();
      Elem wk = f.one();
      for (unsigned k = 0; k < p; ++k) {
        const Elem zk = zeta.pow(k).inv();
        Elem z = f.one();
        for (unsigned c = 0; c < p; ++c) {
          L.inv_local[(t * p + k) * p + c] = wk * z * inv_p;
          z = z * zk;
        }
        wk = wk * w0_inv;
      }
      parent = parent * parent_step;
    }
    plan.tower.levels.push_back(std::move(L));
    group *= p;
  }
  return plan;
}

EvalVec mult_fft(const MultPlan& plan, const CoeffVec& coeffs) {
  require_basis(coeffs, Basis::Standard);
  require_length(coeffs.coeffs.size(), plan.n, "mult_fft");
  EvalVec out;
  for (auto p : plan.points) out.points.push_back(Place::finite(p));
  out.values = plan.tower.forward(coeffs.coeffs);
  return out;
}

CoeffVec mult_ifft(const MultPlan& plan, const EvalVec& values) {
  require_length(values.values.size(), plan.n, "mult_ifft");
  return {Basis::Standard, plan.tower.inverse(values.values, plan.field->zero())};
}

nlohmann::json mult_plan_to_json(const MultPlan& plan) {
  nlohmann::json pts = nlohmann::json::array();
  for (auto p : plan.points) pts.push_back(elem_to_json(p));
  return {{"case", "mult"},
          {"field", field_to_json(*plan.field)},
          {"radices", plan.radices},
          {"beta", elem_to_json(plan.beta)},
          {"n", plan.n},
          {"alpha", elem_to_json(plan.alpha)},
          {"omega", elem_to_json(plan.omega)},
          {"points", pts}};
}

MultPlan mult_plan_from_json(const nlohmann::json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  return mult_plan(f, j.at("radices").get<std::vector<unsigned>>(),
                   elem_from_json(*f, j.at("beta")));
}

}  // namespace gfft
