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

#include "gfft/tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <string>
#include <thread>

namespace gfft {

namespace {

constexpr std::size_t kParallelMin = 4096;

bool parallel_ok(std::size_t size) {
  return size >= kParallelMin && worker_count() > 1 && detail::active_counter() == nullptr;
}

// Runs body(t) for t in [0, count), chunked across workers when allowed.
void for_fibers(std::size_t count, std::size_t level_size,
                const std::function<void(std::size_t, std::size_t)>& body) {
  if (!parallel_ok(level_size)) {
    body(0, count);
    return;
  }
  const std::size_t w = std::min(worker_count(), count);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + w - 1) / w;
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t lo = i * chunk, hi = std::min(count, lo + chunk);
    if (lo < hi) pool.emplace_back(body, lo, hi);
  }
  for (auto& t : pool) t.join();
}

std::vector<Elem> gather(const std::vector<Elem>& v, std::size_t k, std::size_t stride) {
  std::vector<Elem> out;
  out.reserve(v.size() / stride);
  for (std::size_t i = k; i < v.size(); i += stride) out.push_back(v[i]);
  return out;
}

struct Engine {
  const Tower& tw;
  const Field& field;

  std::vector<Elem> fwd(std::size_t j, const std::vector<Elem>& b) const {
    if (j == tw.levels.size()) {
      return {tw.leaf_vanishes ? field.zero() : b[0] * tw.leaf_scale};
    }
    const TowerLevel& L = tw.levels[j];
    const std::size_t p = L.radix, m = L.size, mp = m / p;
    std::vector<std::vector<Elem>> sub(p);
    if (parallel_ok(m)) {
      std::vector<std::future<std::vector<Elem>>> tasks;
      for (std::size_t k = 0; k < p; ++k) {
        tasks.push_back(std::async(std::launch::async,
                                   [this, j, k, p, &b] { return fwd(j + 1, gather(b, k, p)); }));
      }
      for (std::size_t k = 0; k < p; ++k) sub[k] = tasks[k].get();
    } else {
      for (std::size_t k = 0; k < p; ++k) sub[k] = fwd(j + 1, gather(b, k, p));
    }
    std::vector<Elem> out(m, field.zero());
    for_fibers(mp, m, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        if (L.pole && t == L.pole->parent) {
          out[L.child_pos[t * p]] = sub[0][t];
          for (std::size_t i = 1; i < p; ++i) {
            Elem acc = field.zero();
            for (std::size_t k = i; k < p; ++k) {
              acc = acc + b[k] * L.pole->constants[(i - 1) * (p - 1) + (k - 1)];
            }
            out[L.child_pos[t * p + i]] = acc;
          }
          continue;
        }
        for (std::size_t c = 0; c < p; ++c) {
          const std::size_t pos = L.child_pos[t * p + c];
          Elem acc = sub[p - 1][t];
          for (std::size_t k = p - 1; k-- > 0;) {
            acc = sub[k][t] + L.weights[pos * (p - 1) + k] * acc;
          }
          out[pos] = acc;
        }
      }
    });
    return out;
  }

  std::vector<Elem> inv(std::size_t j, const std::vector<Elem>& vals, Elem top) const {
    if (j == tw.levels.size()) {
      if (tw.leaf_vanishes) return {top};
      return {vals[0] * tw.leaf_scale.inv()};
    }
    const TowerLevel& L = tw.levels[j];
    const std::size_t p = L.radix, m = L.size, mp = m / p;
    std::vector<std::vector<Elem>> sub(p, std::vector<Elem>(mp, field.zero()));
    std::vector<Elem> tops(p, field.zero());
    tops[0] = top;
    for_fibers(mp, m, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        if (L.pole && t == L.pole->parent) {
          // Triangular in k: vals(lambda_i) = sum_{k >= i} b_k C[i][k].
          for (std::size_t i = p - 1; i >= 1; --i) {
            Elem acc = vals[L.child_pos[t * p + i]];
            for (std::size_t k = i + 1; k < p; ++k) {
              acc = acc - tops[k] * L.pole->constants[(i - 1) * (p - 1) + (k - 1)];
            }
            tops[i] = acc / L.pole->constants[(i - 1) * (p - 1) + (i - 1)];
          }
          continue;
        }
        for (std::size_t k = 0; k < p; ++k) {
          Elem acc = field.zero();
          for (std::size_t c = 0; c < p; ++c) {
            acc = acc + L.inv_local[(t * p + k) * p + c] * vals[L.child_pos[t * p + c]];
          }
          sub[k][t] = acc;
        }
      }
    });
    std::vector<std::vector<Elem>> coeffs(p);
    for (std::size_t k = 0; k < p; ++k) coeffs[k] = inv(j + 1, sub[k], tops[k]);
    std::vector<Elem> out(m, field.zero());
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t e = 0; e < mp; ++e) out[k + p * e] = coeffs[k][e];
    }
    return out;
  }
};

}  // namespace

std::size_t worker_count() {
  const char* env = std::getenv("GFFT_THREADS");
  if (env == nullptr) return 0;
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (...) {
    return 0;
  }
}

std::vector<Elem> Tower::forward(const std::vector<Elem>& coeffs) const {
  if (coeffs.size() != length()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(length()) + " coefficients");
  }
  return Engine{*this, *leaf_scale.field()}.fwd(0, coeffs);
}

std::vector<Elem> Tower::inverse(const std::vector<Elem>& values, Elem top_coeff) const {
  if (values.size() != length()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(length()) + " values");
  }
  return Engine{*this, *leaf_scale.field()}.inv(0, values, top_coeff);
}

void build_local_inverses(TowerLevel& level, const Field& field) {
  const std::size_t p = level.radix, mp = level.size / p;
  level.inv_local.assign(mp * p * p, field.zero());
  for (std::size_t t = 0; t < mp; ++t) {
    if (level.pole && t == level.pole->parent) continue;
    Matrix mat(field, p, p);
    for (std::size_t c = 0; c < p; ++c) {
      const std::size_t pos = level.child_pos[t * p + c];
      Elem v = field.one();
      mat(c, 0) = v;
      for (std::size_t k = 1; k < p; ++k) {
        v = v * level.weights[pos * (p - 1) + (k - 1)];
        mat(c, k) = v;
      }
    }
    const Matrix inv = inverse(mat, Errc::SingularLocalSystem);
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t c = 0; c < p; ++c) level.inv_local[(t * p + k) * p + c] = inv(k, c);
    }
  }
}

}  // namespace gfft
