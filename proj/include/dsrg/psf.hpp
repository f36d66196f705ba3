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

#include "dsrg/kernels.hpp"
#include "dsrg/params.hpp"
#include "dsrg/spread.hpp"

namespace dsrg {

/// The integers that pick a member of the spread family: ring (p, s, d),
/// window width w, z1 + 1 blocks, z2 cosets per off-diagonal cell.
struct PsfShape {
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  std::uint32_t d = 1;
  std::uint32_t w = 1;
  std::uint32_t z1 = 1;
  std::uint32_t z2 = 1;

  auto operator<=>(const PsfShape&) const = default;
};

/// z2 = w - 1 or w (nonzero); exactly the values for which the family is a PSF.
bool z2_admissible(std::uint32_t w, std::uint32_t z2) noexcept;

/// Closed-form parameters of the DSRG generated by the spread family.
/// Throws InvalidParameter naming the violated constraint.
DsrgParams psf_parameters(const PsfShape& shape);

/// Bounds on w, z1 and z2 that do not involve admissibility of z2.
void check_shape_ranges(const PsfShape& shape);

struct PsfConfig {
  std::uint32_t w = 1;
  std::uint32_t z1 = 1;
  std::uint32_t z2 = 1;
  /// k_0 < k_1 < ... < k_{z1}: block i is the window of labels [k_i, k_i + w - 1].
  /// Empty selects the leftmost windows k_i = i.
  std::vector<std::uint32_t> block_starts;
  /// When set, T_{i,j} is a seeded random z2-subset of the coset representatives
  /// instead of the first z2 in canonical order.
  std::optional<std::uint64_t> seed;
  /// Build even when z2 is not admissible; declared parameters are then withheld.
  bool force = false;
};

/// An m x m array of subsets of G = R x R, stored as sorted canonical indices.
class PsfFamily {
 public:
  PsfFamily(ChainRing ring, std::size_t m, std::vector<std::vector<ElementIndex>> sets,
            std::optional<DsrgParams> declared = std::nullopt);

  const ChainRing& ring() const noexcept { return group_.ring(); }
  const PairGroup& group() const noexcept { return group_; }
  std::size_t block_count() const noexcept { return m_; }
  std::uint32_t group_order() const noexcept { return group_.order(); }
  const std::vector<ElementIndex>& set(std::size_t i, std::size_t j) const { return sets_.at(i * m_ + j); }
  const std::vector<std::vector<ElementIndex>>& sets() const noexcept { return sets_; }
  const std::optional<DsrgParams>& declared() const noexcept { return declared_; }

  /// Present for families that came out of build_psf / build_uniform_psf.
  const std::optional<PsfShape>& shape() const noexcept { return shape_; }
  bool complemented() const noexcept { return complemented_; }

  bool operator==(const PsfFamily& other) const {
    return group_.ring() == other.group_.ring() && m_ == other.m_ && sets_ == other.sets_ &&
           declared_ == other.declared_;
  }

 private:
  friend PsfFamily build_psf(const ChainRing&, const PsfConfig&, std::uint64_t);
  friend PsfFamily deleted_family(const PsfFamily&, std::size_t);
  friend PsfFamily complement_family(const PsfFamily&);

  PairGroup group_;
  std::size_t m_;
  std::vector<std::vector<ElementIndex>> sets_;
  std::optional<DsrgParams> declared_;
  std::optional<PsfShape> shape_;
  bool complemented_ = false;
};

/// S_{i,i} = union of the w lines of block i minus the origin; S_{i,j} (i != j)
/// is the union of z2 cosets of L_{b_{i,j}}, b_{i,j} = first label of block i
/// when i < j and last label when i > j.
PsfFamily build_psf(const ChainRing& ring, const PsfConfig& config, std::uint64_t group_cap = kDefaultGroupCap);

/// Checks the partial-sum-family conditions by exact multiset convolution:
/// identity outside the diagonal sets, constant row and column sums k, and
/// sum_l S_{i,l} S_{l,j} = mu G + (lambda - mu) S_{i,j} + delta_{ij} (t - mu) e
/// for constants shared by every cell. Cells are convolved in parallel.
Verdict verify_psf(const PsfFamily& family, Backend backend = Backend::parallel);

/// Equal diagonal sizes, equal off-diagonal sizes, diagonals partition G \ {0}.
bool is_uniform(const PsfFamily& family);

/// m = (p^d + 1) / w blocks tiling J'; requires s = 1 and w | p^d + 1.
PsfFamily build_uniform_psf(std::uint32_t p, std::uint32_t d, std::uint32_t w, std::uint32_t z2);

/// Drops block c; declared parameters use z1 - 1.
PsfFamily deleted_family(const PsfFamily& family, std::size_t c);

/// Diagonal sets complemented in G \ {0}, off-diagonal in G.
PsfFamily complement_family(const PsfFamily& family);

struct RealizableTuple {
  DsrgParams params;
  /// First shape the sweep met that produces params.
  PsfShape shape;
};

/// Every distinct parameter tuple with v <= bound produced by an admissible
/// shape, sorted by parameters.
std::vector<RealizableTuple> sweep_parameters(std::uint64_t bound);

}  // namespace dsrg
