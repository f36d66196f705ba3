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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dsrg {

/// Default upper bound on p^{sd} for constructed rings.
inline constexpr std::uint64_t kDefaultRingCap = std::uint64_t{1} << 16;

/// Canonical position of a ring element (or of a group element of R x R).
using ElementIndex = std::uint32_t;

/// Coefficient vector of the representative polynomial, least significant first.
/// Ordering is lexicographic on the vector, which is also the index order.
struct RingElement {
  std::vector<std::uint32_t> coeffs;

  auto operator<=>(const RingElement&) const = default;
};

struct GroupElement {
  RingElement x;
  RingElement y;

  auto operator<=>(const GroupElement&) const = default;
};

/// A finite chain ring realized as Z_{p^s}[x]/(f) with f monic of degree d and
/// irreducible mod p: Z_{p^s} when d = 1, GF(p^d) when s = 1, GR(p^s, d) otherwise.
/// The maximal ideal is (p).
class ChainRing {
 public:
  /// Picks the lexicographically least monic irreducible of degree d over Z_p.
  static ChainRing make(std::uint32_t p, std::uint32_t s, std::uint32_t d,
                        std::uint64_t cap = kDefaultRingCap);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint32_t d() const noexcept { return d_; }
  /// p^s, the characteristic.
  std::uint32_t characteristic() const noexcept { return char_; }
  /// p^{sd}
  std::uint32_t size() const noexcept { return size_; }
  /// |I| = p^{(s-1)d}
  std::uint32_t ideal_size() const noexcept { return size_ / residue_size_; }
  /// |R/I| = p^d
  std::uint32_t residue_size() const noexcept { return residue_size_; }
  std::uint32_t unit_count() const noexcept { return size_ - ideal_size(); }
  /// Non-leading coefficients of the monic modulus, least significant first.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  std::string name() const;

  RingElement element(ElementIndex index) const;
  ElementIndex index_of(const RingElement& a) const;
  RingElement zero() const;
  RingElement one() const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;

  bool is_unit(const RingElement& a) const;
  /// True iff a lies in I^power, i.e. every coefficient is divisible by p^power.
  bool in_ideal_power(const RingElement& a, std::uint32_t power) const;

  /// J: the p^d elements with all coefficients in [0, p), in canonical order.
  std::vector<RingElement> coset_reps() const;

  // Index-level arithmetic used by the hot loops.
  ElementIndex add_index(ElementIndex a, ElementIndex b) const noexcept;
  ElementIndex neg_index(ElementIndex a) const noexcept;
  ElementIndex mul_index(ElementIndex a, ElementIndex b) const;

  bool operator==(const ChainRing& other) const noexcept {
    return p_ == other.p_ && s_ == other.s_ && d_ == other.d_ && modulus_ == other.modulus_;
  }

 private:
  ChainRing(std::uint32_t p, std::uint32_t s, std::uint32_t d, std::vector<std::uint32_t> modulus);

  void check(const RingElement& a) const;

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint32_t d_;
  std::uint32_t char_;
  std::uint32_t residue_size_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
};

/// True iff the monic polynomial x^d + sum coeffs[i] x^i is irreducible over Z_p.
/// Exhaustive trial division by every monic polynomial of degree <= d/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p);

/// Canonical group index of (x, y) in R x R: index(x) * |R| + index(y).
inline ElementIndex group_index(const ChainRing& ring, ElementIndex x, ElementIndex y) noexcept {
  return x * ring.size() + y;
}

}  // namespace dsrg
