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

#include <cstdint>
#include <optional>
#include <vector>

#include "dsrg/ring.hpp"

namespace dsrg {

/// F_q with elements addressed by canonical index. Prime fields use plain
/// residues (index = value); extension fields use ChainRing(p, 1, d) and its
/// canonical order. Multiplication goes through discrete log tables.
class FiniteField {
 public:
  static FiniteField make(std::uint64_t q, std::uint64_t cap = std::uint64_t{1} << 24);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_prime_field() const noexcept { return degree_ == 1; }

  ElementIndex zero() const noexcept { return 0; }
  ElementIndex one() const noexcept { return one_; }
  /// Least primitive element in canonical order.
  ElementIndex primitive() const noexcept { return omega_; }

  ElementIndex add(ElementIndex a, ElementIndex b) const noexcept {
    return ring_ ? ring_->add_index(a, b) : (a + b) % q_;
  }
  ElementIndex neg(ElementIndex a) const noexcept { return ring_ ? ring_->neg_index(a) : (q_ - a) % q_; }
  ElementIndex sub(ElementIndex a, ElementIndex b) const noexcept { return add(a, neg(b)); }
  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  ElementIndex inv(ElementIndex a) const;

  /// omega^k for the canonical primitive element omega, any integer k.
  ElementIndex power_of_primitive(std::int64_t k) const noexcept {
    const std::int64_t n = q_ - 1;
    return exp_[static_cast<std::size_t>(((k % n) + n) % n)];
  }
  /// Discrete log base omega; a must be nonzero.
  std::uint32_t log(ElementIndex a) const;
  ElementIndex pow(ElementIndex a, std::uint64_t k) const;
  /// Image of the integer n under Z -> F_q.
  ElementIndex from_integer(std::int64_t n) const;
  /// For elements of the prime subfield, the residue in [0, p); nullopt otherwise.
  std::optional<std::uint32_t> prime_subfield_value(ElementIndex a) const;

  const std::optional<ChainRing>& ring() const noexcept { return ring_; }

 private:
  FiniteField() = default;

  ElementIndex slow_mul(ElementIndex a, ElementIndex b) const;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t degree_ = 0;
  ElementIndex one_ = 1;
  ElementIndex omega_ = 1;
  std::optional<ChainRing> ring_;
  std::vector<ElementIndex> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace dsrg
