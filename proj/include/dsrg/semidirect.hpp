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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsrg/cyclotomy.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/kernels.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

/// H x| K with H = (F_q, +) and K = <rho>, rho(x) = omega^e x, |K| = f.
/// (h, i)(h', i') = (h + omega^{e i} h', i + i' mod f). Element (h, i) has
/// index h * f + i, so the identity is 0.
class SemidirectGroup {
 public:
  static SemidirectGroup make(std::uint64_t q, std::uint32_t e);

  const CyclotomicSetup& cyclotomy() const noexcept { return setup_; }
  const FiniteField& field() const noexcept { return setup_.field; }
  std::uint32_t q() const noexcept { return setup_.q(); }
  std::uint32_t e() const noexcept { return setup_.e; }
  std::uint32_t f() const noexcept { return setup_.f; }

  std::size_t order() const noexcept { return std::size_t{q()} * f(); }
  std::uint32_t identity() const noexcept { return 0; }

  std::uint32_t encode(ElementIndex h, std::uint32_t i) const noexcept { return h * f() + i; }
  std::pair<ElementIndex, std::uint32_t> decode(std::uint32_t g) const noexcept { return {g / f(), g % f()}; }

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const noexcept {
    const auto [h, i] = decode(a);
    const auto [h2, i2] = decode(b);
    const auto& F = field();
    return encode(F.add(h, F.mul(rho_powers_[i], h2)), (i + i2) % f());
  }
  std::uint32_t inverse(std::uint32_t a) const noexcept;

 private:
  explicit SemidirectGroup(CyclotomicSetup setup);

  CyclotomicSetup setup_;
  std::vector<ElementIndex> rho_powers_;  // omega^{e i}, 0 <= i < f
};

/// W = {(-1 + d, rho^i) : d in D, 0 <= i < f}, sorted.
struct ConnectionSet {
  std::vector<std::uint32_t> members;
};

/// D must be a union of cyclotomic classes and must not contain 1.
ConnectionSet connection_set(const SemidirectGroup& group, std::span<const ElementIndex> d);

/// Convenience: D = union of the listed classes.
ConnectionSet connection_set_from_classes(const SemidirectGroup& group, std::span<const std::uint32_t> classes);

/// Multiset W.W tallied over G: constant t at the identity, lambda on W, mu elsewhere.
Verdict groupring_square_check(const SemidirectGroup& group, const ConnectionSet& w,
                               Backend backend = Backend::parallel);

/// (i, j)_e constant over j.
bool flatness_check(const CyclotomicSetup& setup, std::uint32_t i);

struct SemidirectOptions {
  /// Materialize the Cayley digraph and run the adjacency oracle when v <= this.
  std::size_t adjacency_cap = 4000;
  Backend backend = Backend::parallel;
};

struct SemidirectConstruction {
  SemidirectGroup group;
  ConnectionSet connection;
  DsrgParams expected;
  Verdict groupring;
  std::optional<Digraph> digraph;
  std::optional<Verdict> adjacency;

  /// Group-ring verdict (and adjacency verdict when run) equal the closed form.
  bool verified() const;
};

/// v = (p-1)p/4, k = (p-1)^2/16, lambda = (p-1)^2/64 - (p-1)/16, mu = t = (p-1)^2/64.
DsrgParams order4_parameters(std::uint64_t p);
/// v = (q-1)q/6, k = (q-1)^2/36, lambda = (q-1)^2/216 - (q-1)/36, mu = t = (q-1)^2/216.
DsrgParams order6_parameters(std::uint64_t q);

/// p = 1 + 4t^2 prime with t even; D = C_2 of order 4.
SemidirectConstruction order4_construct(std::uint64_t p, const SemidirectOptions& options = {});
/// q = 1 + 3b^2 prime power with b even and 2 a cube; D = C_3 of order 6.
SemidirectConstruction order6_construct(std::uint64_t q, const SemidirectOptions& options = {});

/// Primes p <= bound with p = 1 + 4t^2, t even.
std::vector<std::uint64_t> enumerate_e4(std::uint64_t bound);
/// Prime powers q <= bound with q = 1 + 3b^2, b even, and 2 a cube in F_q.
std::vector<std::uint64_t> enumerate_e6(std::uint64_t bound);

}  // namespace dsrg
