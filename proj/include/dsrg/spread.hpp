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
#include <vector>

#include "dsrg/ring.hpp"

namespace dsrg {

/// Default upper bound on |G| = p^{2sd}.
inline constexpr std::uint64_t kDefaultGroupCap = std::uint64_t{1} << 18;

/// Index-level arithmetic in G = R x R.
class PairGroup {
 public:
  explicit PairGroup(ChainRing ring) : ring_(std::move(ring)) {}

  const ChainRing& ring() const noexcept { return ring_; }
  std::uint32_t order() const noexcept { return ring_.size() * ring_.size(); }

  ElementIndex add(ElementIndex g, ElementIndex h) const noexcept {
    const auto n = ring_.size();
    return ring_.add_index(g / n, h / n) * n + ring_.add_index(g % n, h % n);
  }
  ElementIndex neg(ElementIndex g) const noexcept {
    const auto n = ring_.size();
    return ring_.neg_index(g / n) * n + ring_.neg_index(g % n);
  }
  GroupElement element(ElementIndex g) const { return {ring_.element(g / ring_.size()), ring_.element(g % ring_.size())}; }
  ElementIndex index_of(const GroupElement& g) const { return group_index(ring_, ring_.index_of(g.x), ring_.index_of(g.y)); }

 private:
  ChainRing ring_;
};

/// One member of the spread: L_a = {(x, ax)} for a in J, or L_inf = {(0, x)}.
struct SpreadLine {
  std::optional<RingElement> slope;  // nullopt for L_inf
  std::vector<ElementIndex> members;  // sorted canonical group indices

  bool is_infinite() const noexcept { return !slope.has_value(); }
};

/// The spread {L_a : a in J'} of G = R x R. Labels are positions in J':
/// label 0 is infinity, label k >= 1 is the (k-1)-th element of J in canonical order.
class Spread {
 public:
  static Spread build(const ChainRing& ring, std::uint64_t group_cap = kDefaultGroupCap);

  const ChainRing& ring() const noexcept { return group_.ring(); }
  const PairGroup& group() const noexcept { return group_; }
  std::uint32_t group_order() const noexcept { return group_.order(); }
  std::size_t line_count() const noexcept { return lines_.size(); }
  const SpreadLine& line(std::size_t label) const;
  const std::vector<SpreadLine>& lines() const noexcept { return lines_; }

  /// Greedy coset representatives of L_label in canonical order; first is (0,0).
  std::vector<ElementIndex> line_cosets(std::size_t label) const;

  /// Checks L_a + L_b = G as a multiset (every element exactly once).
  /// Throws InvalidParameter when a == b.
  bool product_is_G(std::size_t a, std::size_t b) const;

 private:
  explicit Spread(PairGroup group) : group_(std::move(group)) {}

  PairGroup group_;
  std::vector<SpreadLine> lines_;
};

}  // namespace dsrg
