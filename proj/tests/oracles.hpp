/*
 * Copyright 2026 The dsrgkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Test-only reference computations. Nothing here calls into the kernels or
// verifiers under test; each oracle recomputes its answer from definitions.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dsrg/params.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Checks the DSRG definition directly: degrees, then every 2-path count via
/// an integer matrix product. Returns nullopt unless a single (k, lambda, mu, t)
/// fits; undetermined lambda or mu are reported as 0.
inline std::optional<dsrg::DsrgParams> dsrg_from_matrix(const Matrix& a) {
  const std::size_t v = a.size();
  std::int64_t k = -1;
  for (std::size_t i = 0; i < v; ++i) {
    if (a[i][i] != 0) return std::nullopt;
    std::int64_t out = 0;
    std::int64_t in = 0;
    for (std::size_t j = 0; j < v; ++j) {
      out += a[i][j];
      in += a[j][i];
    }
    if (k < 0) k = out;
    if (out != k || in != k) return std::nullopt;
  }
  std::set<std::int64_t> t;
  std::set<std::int64_t> lambda;
  std::set<std::int64_t> mu;
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = 0; y < v; ++y) {
      std::int64_t paths = 0;
      for (std::size_t z = 0; z < v; ++z) paths += a[x][z] * a[z][y];
      if (x == y) {
        t.insert(paths);
      } else if (a[x][y]) {
        lambda.insert(paths);
      } else {
        mu.insert(paths);
      }
    }
  }
  if (t.size() > 1 || lambda.size() > 1 || mu.size() > 1) return std::nullopt;
  auto only = [](const std::set<std::int64_t>& s) { return s.empty() ? 0 : *s.begin(); };
  return dsrg::DsrgParams{static_cast<std::int64_t>(v), k < 0 ? 0 : k, only(lambda), only(mu), only(t)};
}

/// Dense 0/1 copy of any graph exposing vertex_count() and has_arc(u, w).
template <class Graph>
Matrix to_matrix(const Graph& g) {
  Matrix a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t w = 0; w < a.size(); ++w) a[u][w] = g.has_arc(u, w) ? 1 : 0;
  }
  return a;
}

/// Least primitive root mod a prime by computing multiplicative orders.
inline std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 1; g < p; ++g) {
    std::uint64_t x = 1;
    std::uint64_t order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  return 0;
}

/// (i, j)_e over a prime field with plain integers.
inline std::vector<std::vector<std::int64_t>> cyclotomic_numbers_prime(std::uint64_t p, std::uint64_t e) {
  const std::uint64_t g = primitive_root(p);
  std::vector<std::int64_t> log(p, -1);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    log[x] = static_cast<std::int64_t>(k);
    x = x * g % p;
  }
  std::vector<std::vector<std::int64_t>> table(e, std::vector<std::int64_t>(e, 0));
  for (std::uint64_t c = 1; c < p; ++c) {
    const std::uint64_t next = (c + 1) % p;
    if (next == 0) continue;
    ++table[static_cast<std::uint64_t>(log[c]) % e][static_cast<std::uint64_t>(log[next]) % e];
  }
  return table;
}

/// Monic irreducibles of degree d over Z_p (coefficients low first, leading 1
/// omitted), found by crossing out every product of two monic factors.
inline std::set<std::vector<std::uint32_t>> irreducibles(std::uint32_t p, std::uint32_t d) {
  auto all_monic = [p](std::uint32_t deg) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> c(deg, 0);
    while (true) {
      auto full = c;
      full.push_back(1);
      out.push_back(full);
      std::size_t i = 0;
      while (i < deg && ++c[i] == p) c[i++] = 0;
      if (i == deg) break;
    }
    return out;
  };
  std::set<std::vector<std::uint32_t>> reducible;
  for (std::uint32_t a = 1; a < d; ++a) {
    for (const auto& f : all_monic(a)) {
      for (const auto& g : all_monic(d - a)) {
        std::vector<std::uint32_t> prod(d + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
          for (std::size_t j = 0; j < g.size(); ++j) prod[i + j] = (prod[i + j] + f[i] * g[j]) % p;
        }
        prod.pop_back();
        reducible.insert(prod);
      }
    }
  }
  std::set<std::vector<std::uint32_t>> out;
  for (auto f : all_monic(d)) {
    f.pop_back();
    if (!reducible.count(f)) out.insert(f);
  }
  return out;
}

}  // namespace oracle
