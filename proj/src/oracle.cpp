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

#include "gfft/oracle.hpp"

#include <set>

namespace gfft {

namespace {

Matrix from_columns(const Field& f, const std::vector<Poly>& cols, std::size_t n) {
  Matrix m(f, n, cols.size());
  for (std::size_t e = 0; e < cols.size(); ++e) {
    if (cols[e].deg() >= static_cast<long>(n)) {
      throw Error(Errc::DegreeTooLarge, "basis element " + std::to_string(e) + " has degree >= n");
    }
    for (std::size_t i = 0; i < cols[e].coeffs().size(); ++i) m(i, e) = cols[e].coeffs()[i];
  }
  return m;
}

}  // namespace

std::vector<Elem> mpe_horner(const std::vector<Elem>& coeffs, const std::vector<Place>& points) {
  if (coeffs.empty()) throw Error(Errc::InvalidArgument, "empty coefficient vector");
  const Field& f = *coeffs.front().field();
  const Poly g(f, coeffs);
  std::vector<Elem> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.is_infinity() ? coeffs.back() : g(p.alpha()));
  return out;
}

Poly lagrange_interpolate(const Field& field, const std::vector<Elem>& xs,
                          const std::vector<Elem>& ys) {
  require_length(ys.size(), xs.size(), "lagrange_interpolate");
  std::set<Elem> seen;
  for (auto x : xs) {
    if (!seen.insert(x).second) throw Error(Errc::DuplicatePoint, "repeated abscissa");
  }
  const Poly master = from_roots(field, xs);
  Poly acc(field);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Poly basis = divrem(master, from_roots(field, {xs[i]})).first;
    acc = acc + (ys[i] / basis(xs[i])) * basis;
  }
  return acc;
}

Matrix basis_matrix(const MultPlan& plan) { return Matrix::identity(*plan.field, plan.n); }

Matrix basis_matrix(const AddPlan& plan) {
  const Field& f = *plan.field;
  std::vector<Poly> cols;
  for (std::size_t e = 0; e < plan.n; ++e) {
    Poly acc = Poly::constant(f.one());
    std::size_t rest = e;
    for (std::size_t i = 0; i < plan.r; ++i, rest /= plan.p) {
      acc = acc * plan.ells[i].pow(rest % plan.p);
    }
    cols.push_back(std::move(acc));
  }
  return from_columns(f, cols, plan.n);
}

Matrix basis_matrix(const CyclicPlan& plan) {
  const Field& f = *plan.field;
  const std::size_t r = plan.radices.size();
  // zs[i][k] = z_i^(k) = prod_{m<=k} 1/(x_i - lambda_{i+1,m}).
  std::vector<std::vector<RatFn>> zs(r);
  for (std::size_t i = 0; i < r; ++i) {
    zs[i].emplace_back(Poly::constant(f.one()));
    for (auto lam : plan.lambdas[i]) {
      zs[i].push_back(zs[i].back() / (plan.xs[i] - RatFn(Poly::constant(lam))));
    }
  }
  const RatFn d_r(plan.xs.back().den());
  std::vector<Poly> cols;
  for (std::size_t e = 0; e < plan.n; ++e) {
    RatFn acc = d_r;
    std::size_t rest = e;
    for (std::size_t i = 0; i < r; ++i) {
      acc = acc * zs[i][rest % plan.radices[i]];
      rest /= plan.radices[i];
    }
    if (acc.den().deg() != 0) {
      throw Error(Errc::DegreeTooLarge, "z-basis element " + std::to_string(e) + " is not a polynomial");
    }
    cols.push_back(acc.num());
  }
  return from_columns(f, cols, plan.n);
}

std::vector<Elem> to_standard(const Matrix& basis, const std::vector<Elem>& coeffs) {
  return basis.apply(coeffs);
}

std::vector<Elem> from_standard(const Matrix& basis, const std::vector<Elem>& coeffs) {
  return solve(basis, coeffs);
}

}  // namespace gfft
