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

#include "gfft/cfft.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace gfft {

namespace {

[[noreturn]] void split_failure(const std::string& what) {
  throw Error(Errc::SplitValidationFailure, what);
}

// g'(t) for a rational function finite at t.
Elem derivative_at(const RatFn& g, Elem t) {
  const Elem d = g.den()(t);
  return (g.num().derivative()(t) * d - g.num()(t) * g.den().derivative()(t)) / (d * d);
}

// x_j at a place, through the level maps.
ExtValue level_value(const CyclicPlan& plan, std::size_t j, const Place& place) {
  ExtValue v = place.is_infinity() ? ExtValue::infinite() : ExtValue::val(place.alpha());
  for (std::size_t i = 0; i < j; ++i) v = plan.level_maps[i].eval(v);
  return v;
}

// x_j'(alpha) by the chain rule.
Elem level_derivative(const CyclicPlan& plan, std::size_t j, Elem alpha) {
  const Field& f = *plan.field;
  Elem d = f.one(), v = alpha;
  for (std::size_t i = 0; i < j; ++i) {
    d = d * derivative_at(plan.level_maps[i], v);
    v = plan.level_maps[i].eval(ExtValue::val(v)).value();
  }
  return d;
}

std::vector<Moebius> group_elements(const CyclicPlan& plan, std::size_t level) {
  std::vector<Moebius> out{Moebius::identity(*plan.field)};
  if (level == 0) return out;
  std::size_t size = 1;
  for (std::size_t i = 0; i < level; ++i) size *= plan.radices[i];
  const Moebius& gen = plan.taus[level - 1];
  while (out.size() < size) out.push_back(out.back() * gen);
  return out;
}

// c_r0 = prod_tau kappa_tau / lead_tau^2, where Q(tau x)(c x + d)^2 = kappa_tau Q(x).
Elem closed_form_c(const CyclicPlan& plan) {
  const Field& f = *plan.field;
  const Elem qa = plan.q_poly.coeff(1), qb = plan.q_poly.coeff(0);
  Elem num = f.one(), den = f.one();
  for (const auto& t : group_elements(plan, plan.radices.size())) {
    const Elem a = t.a(), b = t.b(), c = t.c(), d = t.d();
    const Elem kappa = a * a + qa * a * c + qb * c * c;
    const Elem lin = (a * b + b * a) + qa * (a * d + b * c) + (qb * c * d + qb * d * c);
    const Elem cst = b * b + qa * b * d + qb * d * d;
    if (kappa.is_zero() || lin != kappa * qa || cst != kappa * qb) {
      split_failure("Q is not fixed by " + t.to_string());
    }
    const Elem lead = c.is_zero() ? d : c;
    num = num * kappa;
    den = den * lead * lead;
  }
  return num / den;
}

Poly suffix_product(const std::vector<Poly>& ps, std::size_t from, const Field& f) {
  Poly acc = Poly::constant(f.one());
  for (std::size_t m = from; m < ps.size(); ++m) acc = acc * ps[m];
  return acc;
}

Poly tilde_to_std_rec(const CyclicPlan& plan, std::size_t level, const std::vector<Elem>& c,
                      std::size_t lo, std::size_t len, const std::vector<std::vector<Poly>>& w) {
  if (level == 0) return Poly::constant(c[lo]);
  const std::size_t p = plan.radices[level - 1], block = len / p;
  Poly acc(*plan.field);
  for (std::size_t k = 0; k < p; ++k) {
    const Poly sub = tilde_to_std_rec(plan, level - 1, c, lo + k * block, block, w);
    if (!sub.is_zero()) acc = acc + w[level - 1][k] * sub;
  }
  return acc;
}

void std_to_tilde_rec(const CyclicPlan& plan, std::size_t level, Poly g, std::vector<Elem>& out,
                      std::size_t lo, std::size_t len) {
  if (level == 0) {
    out[lo] = g.coeff(0);
    return;
  }
  const CyclicConvLevel& cv = plan.conv[level - 1];
  const std::size_t p = plan.radices[level - 1], block = len / p;
  for (std::size_t k = p; k-- > 1;) {
    const Poly& e = cv.ebar[k - 1];
    const Poly dk = cv.d.pow(k);
    const Poly fk = cv.lead_prefix[k] * (((g % e) * cv.dpow_inv[k]) % e);
    auto [quo, rem] = divrem(g - cv.lead_prefix[k].inv() * (dk * fk), e);
    if (!rem.is_zero()) split_failure("z-basis peel left a remainder");
    std_to_tilde_rec(plan, level - 1, fk, out, lo + k * block, block);
    g = std::move(quo);
  }
  std_to_tilde_rec(plan, level - 1, std::move(g), out, lo, block);
}

}  // namespace

CyclicPlan cyclic_plan(FieldPtr field, const std::vector<unsigned>& radices,
                       std::optional<std::pair<Elem, Elem>> m, std::optional<Elem> fiber) {
  const Field& f = *field;
  const std::uint64_t group_order = std::uint64_t{f.q()} + 1;
  CyclicPlan plan(field);
  plan.radices = radices;
  for (auto p : radices) {
    if (p < 2) throw Error(Errc::InvalidArgument, "radices must be >= 2");
    plan.n *= p;
  }
  if (group_order % plan.n != 0) {
    throw Error(Errc::RadixNotDividing,
                "radix product does not divide q+1 = " + std::to_string(group_order));
  }
  const std::size_t n = plan.n, r = radices.size();

  std::tie(plan.a, plan.b) = m ? *m : find_primitive_quadratic(f);
  if (!is_primitive_quadratic(plan.a, plan.b)) {
    throw Error(Errc::PrimitivityFailure, "x^2 + " + std::to_string(plan.a.code()) + "x + " +
                                              std::to_string(plan.b.code()) + " is not primitive");
  }
  const Elem binv = plan.b.inv();
  plan.q_poly = Poly(f, {binv, plan.a * binv, f.one()});
  plan.sigma = Moebius(f.zero(), f.one(), -plan.b, -plan.a);
  if (order(plan.sigma) != group_order) {
    throw Error(Errc::PrimitivityFailure, "sigma does not have order q+1");
  }
  plan.taus = subgroup_chain(plan.sigma, radices).level_generators;

  // Tower x_i = sum_{k < p_i} x_{i-1} o tau_i^k = X_i(x_{i-1}), where
  // X_i = sum_k tau_bar_i^k.
  plan.xs.push_back(RatFn::x(f));
  for (std::size_t i = 1; i <= r; ++i) {
    const unsigned p = radices[i - 1];
    const RatFn& prev = plan.xs.back();
    const Moebius& tau = plan.taus[i - 1];
    // tau_i induces mu_j on the x_j-line with X_j o mu_{j-1} = mu_j o X_j;
    // lifting through the degree-p_j maps avoids composing x_{i-1} itself.
    Moebius tb = tau;
    for (std::size_t j = 1; j < i; ++j) {
      tb = match_moebius(compose(plan.level_maps[j - 1], tb), plan.level_maps[j - 1]);
    }
    RatFn big_x{Poly(f)};
    Moebius tbk = Moebius::identity(f);
    std::vector<Elem> lam;
    for (unsigned k = 0; k < p; ++k) {
      big_x = big_x + tbk.as_ratfn();
      tbk = tbk * tb;
    }
    if (!tbk.is_identity()) split_failure("tau_bar order does not divide p");
    RatFn xi = compose(big_x, prev);
    // lambda_{i,k} = tau_bar^k(inf).
    Moebius pw = tb;
    for (unsigned k = 1; k < p; ++k) {
      const ExtValue v = pw.act(ExtValue::infinite());
      if (v.is_infinite()) split_failure("tau_bar orbit of infinity returns early");
      lam.push_back(v.value());
      pw = pw * tb;
    }
    std::vector<Elem> sorted = lam;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      split_failure("lambda values not distinct at level " + std::to_string(i));
    }
    if (big_x.num().deg() != static_cast<long>(p) ||
        roots_in_field(big_x.den()) != sorted ||
        big_x.den().deg() != static_cast<long>(p - 1)) {
      split_failure("pole set of X_" + std::to_string(i) + " does not match the tau_bar orbit");
    }
    plan.tau_bars.push_back(tb);
    plan.level_maps.push_back(big_x);
    plan.lambdas.push_back(std::move(lam));
    plan.xs.push_back(std::move(xi));
  }
  plan.u_r0 = plan.xs.back().num();
  plan.d_r0 = plan.xs.back().den();
  plan.c_r0 = closed_form_c(plan);

  // x_r on every rational place, bucketed by value.
  std::vector<Place> places{Place::infinity()};
  for (std::uint32_t c = 0; c < f.q(); ++c) places.push_back(Place::finite(f.element(c)));
  std::vector<std::vector<ExtValue>> vals(places.size());
  std::map<ExtValue, std::vector<std::size_t>> buckets;
  for (std::size_t s = 0; s < places.size(); ++s) {
    vals[s].push_back(places[s].is_infinity() ? ExtValue::infinite()
                                              : ExtValue::val(places[s].alpha()));
    for (std::size_t i = 0; i < r; ++i) vals[s].push_back(plan.level_maps[i].eval(vals[s].back()));
    buckets[vals[s].back()].push_back(s);
  }
  for (const auto& [v, members] : buckets) {
    if (members.size() != n) split_failure("fiber of x_r over " + v.to_string() + " has wrong size");
  }
  std::vector<std::size_t> chosen;
  if (n == group_order) {
    if (fiber) throw Error(Errc::InvalidArgument, "fiber choice needs n < q+1");
    chosen = buckets.begin()->second;
  } else {
    if (fiber) {
      if (fiber->is_zero()) throw Error(Errc::InvalidArgument, "fiber value must be nonzero");
      auto it = buckets.find(ExtValue::val(*fiber));
      if (it == buckets.end()) {
        throw Error(Errc::InvalidArgument, "x_r does not take the value " + std::to_string(fiber->code()));
      }
      plan.fiber = *fiber;
    } else {
      for (const auto& [v, members] : buckets) {
        if (!v.is_infinite() && !v.value().is_zero()) {
          plan.fiber = v.value();
          break;
        }
      }
      if (!plan.fiber) throw Error(Errc::InvalidArgument, "no nonzero finite fiber");
    }
    chosen = buckets.at(ExtValue::val(*plan.fiber));
  }

  // Positions, top-down: child c of parent t sits at t*p + c.
  std::vector<std::map<ExtValue, std::size_t>> pos(r + 1);
  pos[r][vals[chosen.front()][r]] = 0;
  for (std::size_t j = r; j-- > 0;) {
    const unsigned p = radices[j];
    std::map<ExtValue, std::set<ExtValue>> kids;
    for (auto s : chosen) kids[vals[s][j + 1]].insert(vals[s][j]);
    for (const auto& [parent, set] : kids) {
      if (set.size() != p) split_failure("level " + std::to_string(j) + " fiber has wrong size");
      const std::size_t t = pos[j + 1].at(parent);
      std::vector<ExtValue> order_kids;
      if (parent.is_infinite()) {
        order_kids.push_back(ExtValue::infinite());
        for (auto l : plan.lambdas[j]) order_kids.push_back(ExtValue::val(l));
      } else {
        const ExtValue c0 = *set.begin();
        Moebius pw = Moebius::identity(f);
        for (unsigned c = 0; c < p; ++c) {
          order_kids.push_back(pw.act(c0));
          pw = pw * plan.tau_bars[j];
        }
      }
      for (unsigned c = 0; c < p; ++c) {
        if (!set.count(order_kids[c])) split_failure("fiber constancy violated");
        pos[j][order_kids[c]] = t * p + c;
      }
    }
  }
  plan.points.assign(n, Place::infinity());
  for (const auto& [v, s] : pos[0]) plan.points[s] = v.as_place();

  // Tower levels.
  for (std::size_t j = 0; j < r; ++j) {
    const unsigned p = radices[j];
    TowerLevel L;
    L.radix = p;
    L.size = pos[j].size();
    L.child_pos.resize(L.size);
    for (std::size_t s = 0; s < L.size; ++s) L.child_pos[s] = s;
    L.weights.assign(L.size * (p - 1), f.zero());
    std::optional<std::size_t> pole_parent;
    if (auto it = pos[j + 1].find(ExtValue::infinite()); it != pos[j + 1].end()) {
      pole_parent = it->second;
    }
    for (const auto& [v, s] : pos[j]) {
      if (pole_parent && s / p == *pole_parent) continue;
      for (unsigned k = 0; k + 1 < p; ++k) {
        L.weights[s * (p - 1) + k] = (v.value() - plan.lambdas[j][k]).inv();
      }
    }
    if (pole_parent) L.pole = PoleFiber{*pole_parent, {}};
    plan.tower.levels.push_back(std::move(L));
  }
  for (std::size_t j = 0; j < r; ++j) {
    TowerLevel& L = plan.tower.levels[j];
    if (L.pole) {
      const unsigned p = radices[j];
      L.pole->constants.assign((p - 1) * (p - 1), f.zero());
      for (unsigned i = 1; i < p; ++i) {
        for (unsigned k = i; k < p; ++k) {
          L.pole->constants[(i - 1) * (p - 1) + (k - 1)] = pole_constant(plan, j, i, k);
        }
      }
    }
    build_local_inverses(L, f);
  }

  // Leaf and final scaling.
  if (plan.full_line()) {
    plan.tower.leaf_vanishes = true;
    plan.tower.leaf_scale = f.one();
    for (std::uint32_t c = 0; c < f.q(); ++c) {
      if (plan.u_r0(f.element(c)).is_zero()) split_failure("u_r0 has a root in F_q");
    }
  } else {
    const Elem a0 = plan.points.front().alpha();
    const Elem y = y_value(plan, r, a0);
    if (plan.c_r0 * plan.q_poly(a0).pow(n) * y != plan.d_r0(a0) * plan.d_r0(a0)) {
      split_failure("c_r0 does not match y_r at " + std::to_string(a0.code()));
    }
    plan.tower.leaf_scale = *plan.fiber * y;
  }
  plan.scale.assign(n, f.zero());
  for (std::size_t s = 0; s < n; ++s) {
    if (plan.points[s].is_infinity()) continue;
    const Elem a = plan.points[s].alpha();
    const Elem u = plan.u_r0(a);
    if (u.is_zero()) split_failure("scale factor undefined at " + std::to_string(a.code()));
    plan.scale[s] = plan.c_r0 * plan.q_poly(a).pow(n) / u;
  }

  // Basis-change tables.
  for (std::size_t j = 0; j < r; ++j) {
    const unsigned p = radices[j];
    CyclicConvLevel cv{plan.xs[j].den(), {}, {f.one()}, {Poly(f)}};
    for (unsigned k = 1; k < p; ++k) {
      const Poly e = plan.xs[j].num() - plan.lambdas[j][k - 1] * cv.d;
      cv.lead_prefix.push_back(cv.lead_prefix.back() * e.lead());
      cv.ebar.push_back(e.monic());
      cv.dpow_inv.push_back(inv_mod(cv.d.pow(k) % cv.ebar.back(), cv.ebar.back()));
    }
    if (cv.d * suffix_product(cv.ebar, 0, f) != plan.xs[j + 1].den()) {
      split_failure("denominator of x_" + std::to_string(j + 1) + " does not factor");
    }
    plan.conv.push_back(std::move(cv));
  }
  return plan;
}

Elem y_value(const CyclicPlan& plan, std::size_t level, Elem alpha) {
  const Field& f = *plan.field;
  Elem acc = f.one();
  for (const auto& t : group_elements(plan, level)) {
    const Place v = t.act(Place::finite(alpha));
    if (v.is_infinity()) return f.zero();
    acc = acc * plan.q_poly(v.alpha()).inv();
  }
  return acc;
}

Elem pole_constant(const CyclicPlan& plan, std::size_t j, std::size_t i, std::size_t k) {
  const auto& lam = plan.lambdas.at(j);
  if (i < 1 || i > k || k > lam.size()) throw Error(Errc::InvalidArgument, "need 1 <= i <= k < p");
  const Elem li = lam[i - 1];
  for (const auto& pl : plan.points) {
    if (pl.is_infinity()) continue;
    const ExtValue v = level_value(plan, j, pl);
    if (v.is_infinite() || v.value() != li) continue;
    const Elem a = pl.alpha();
    Elem den = plan.c_r0 * plan.q_poly(a).pow(plan.n) * level_derivative(plan, j, a);
    for (std::size_t m = 1; m <= k; ++m) {
      if (m != i) den = den * (li - lam[m - 1]);
    }
    return plan.u_r0(a) * plan.d_r0.derivative()(a) / den;
  }
  throw Error(Errc::InvalidArgument, "no evaluation point over lambda_{j+1,i}");
}

CyclicEval q1_eval(const CyclicPlan& plan, const CoeffVec& coeffs) {
  require_basis(coeffs, Basis::CyclicZ);
  require_length(coeffs.coeffs.size(), plan.n, "q1_fft");
  CyclicEval out;
  out.points = plan.points;
  out.tilde = plan.tower.forward(coeffs.coeffs);
  out.values.resize(plan.n);
  for (std::size_t s = 0; s < plan.n; ++s) {
    out.values[s] = plan.points[s].is_infinity() ? coeffs.coeffs[0] : plan.scale[s] * out.tilde[s];
  }
  return out;
}

EvalVec q1_fft(const CyclicPlan& plan, const CoeffVec& coeffs) {
  CyclicEval ev = q1_eval(plan, coeffs);
  return {std::move(ev.points), std::move(ev.values)};
}

CoeffVec q1_ifft(const CyclicPlan& plan, const EvalVec& values) {
  const Field& f = *plan.field;
  require_length(values.values.size(), plan.n, "q1_ifft");
  std::vector<Elem> ordered = values.values;
  if (!values.points.empty() && values.points != plan.points) {
    require_length(values.points.size(), plan.n, "q1_ifft points");
    std::map<Place, std::size_t> where;
    for (std::size_t s = 0; s < plan.n; ++s) where[plan.points[s]] = s;
    std::vector<bool> seen(plan.n, false);
    for (std::size_t s = 0; s < plan.n; ++s) {
      auto it = where.find(values.points[s]);
      if (it == where.end()) {
        throw Error(Errc::InvalidArgument, "point " + values.points[s].to_string() + " not in plan");
      }
      if (seen[it->second]) {
        throw Error(Errc::DuplicatePoint, "point " + values.points[s].to_string() + " repeated");
      }
      seen[it->second] = true;
      ordered[it->second] = values.values[s];
    }
  }
  std::vector<Elem> tilde(plan.n, f.zero());
  Elem top = f.zero();
  for (std::size_t s = 0; s < plan.n; ++s) {
    if (plan.points[s].is_infinity()) {
      top = ordered[s];
    } else {
      tilde[s] = ordered[s] / plan.scale[s];
    }
  }
  return {Basis::CyclicZ, plan.tower.inverse(tilde, top)};
}

std::pair<Elem, Elem> reported_pair(const CyclicEval& ev, std::size_t s) {
  if (ev.points.at(s).is_infinity()) {
    const Elem z = ev.values[s].field()->zero();
    return {z, z};
  }
  return {ev.values[s], ev.tilde[s]};
}

CoeffVec tilde_to_std(const CyclicPlan& plan, const CoeffVec& coeffs) {
  require_basis(coeffs, Basis::CyclicZ);
  require_length(coeffs.coeffs.size(), plan.n, "tilde_to_std");
  const Field& f = *plan.field;
  std::vector<std::vector<Poly>> w;
  for (std::size_t j = 0; j < plan.conv.size(); ++j) {
    const CyclicConvLevel& cv = plan.conv[j];
    std::vector<Poly> wj;
    for (std::size_t k = 0; k < plan.radices[j]; ++k) {
      wj.push_back(cv.lead_prefix[k].inv() * (cv.d.pow(k) * suffix_product(cv.ebar, k, f)));
    }
    w.push_back(std::move(wj));
  }
  const Poly g = tilde_to_std_rec(plan, plan.radices.size(), coeffs.coeffs, 0, plan.n, w);
  if (g.deg() >= static_cast<long>(plan.n)) split_failure("z-basis element of degree >= n");
  std::vector<Elem> out(plan.n, f.zero());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] = g.coeffs()[i];
  return {Basis::Standard, out};
}

CoeffVec std_to_tilde(const CyclicPlan& plan, const CoeffVec& f) {
  require_basis(f, Basis::Standard);
  const Poly g(*plan.field, f.coeffs);
  if (g.deg() >= static_cast<long>(plan.n)) {
    throw Error(Errc::DegreeTooLarge, "degree must be < n = " + std::to_string(plan.n));
  }
  std::vector<Elem> out(plan.n, plan.field->zero());
  std_to_tilde_rec(plan, plan.radices.size(), g, out, 0, plan.n);
  return {Basis::CyclicZ, out};
}

nlohmann::json cyclic_plan_to_json(const CyclicPlan& plan) {
  using nlohmann::json;
  json lams = json::array(), maps = json::array(), pts = json::array(), scale = json::array(),
       poles = json::array();
  for (const auto& l : plan.lambdas) {
    json row = json::array();
    for (auto v : l) row.push_back(elem_to_json(v));
    lams.push_back(row);
  }
  for (const auto& m : plan.level_maps) maps.push_back(m.to_string("T"));
  for (const auto& p : plan.points) pts.push_back(place_to_json(p));
  for (auto s : plan.scale) scale.push_back(elem_to_json(s));
  for (std::size_t j = 0; j < plan.tower.levels.size(); ++j) {
    const auto& L = plan.tower.levels[j];
    if (!L.pole) continue;
    json cs = json::array();
    for (auto c : L.pole->constants) cs.push_back(elem_to_json(c));
    poles.push_back({{"level", j}, {"parent", L.pole->parent}, {"constants", cs}});
  }
  json j = {{"case", "cyclic"},
            {"field", field_to_json(*plan.field)},
            {"radices", plan.radices},
            {"m", {elem_to_json(plan.a), elem_to_json(plan.b)}},
            {"fiber", plan.fiber ? elem_to_json(*plan.fiber) : json(nullptr)},
            {"n", plan.n},
            {"Q", plan.q_poly.to_string()},
            {"sigma", moebius_to_json(plan.sigma)},
            {"lambdas", lams},
            {"level_maps", maps},
            {"c_r0", elem_to_json(plan.c_r0)},
            {"points", pts},
            {"scale", scale},
            {"pole_constants", poles}};
  if (plan.xs.size() > 1) j["x1"] = plan.xs[1].to_string();
  if (plan.n <= 1024) j["u_r0"] = plan.u_r0.to_string();
  return j;
}

CyclicPlan cyclic_plan_from_json(const nlohmann::json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  std::optional<std::pair<Elem, Elem>> m;
  if (j.contains("m") && !j.at("m").is_null()) {
    m = std::make_pair(elem_from_json(*f, j.at("m").at(0)), elem_from_json(*f, j.at("m").at(1)));
  }
  std::optional<Elem> fiber;
  if (j.contains("fiber") && !j.at("fiber").is_null()) fiber = elem_from_json(*f, j.at("fiber"));
  return cyclic_plan(f, j.at("radices").get<std::vector<unsigned>>(), m, fiber);
}

}  // namespace gfft
