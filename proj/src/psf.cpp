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

#include "dsrg/psf.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "dsrg/error.hpp"
#include "dsrg/numtheory.hpp"

namespace dsrg {

namespace {

std::int64_t ring_order(const PsfShape& shape) {
  const auto n = nt::checked_pow(shape.p, shape.s * shape.d);
  if (!n || *n > (std::uint64_t{1} << 31)) throw SizeCapExceeded("p^(sd) too large");
  return static_cast<std::int64_t>(*n);
}

std::int64_t residue_order(const PsfShape& shape) {
  return static_cast<std::int64_t>(*nt::checked_pow(shape.p, shape.d));
}

DsrgParams unchecked_parameters(const PsfShape& shape) {
  const std::int64_t r = ring_order(shape);
  const std::int64_t w = shape.w;
  const std::int64_t z1 = shape.z1;
  const std::int64_t z2 = shape.z2;
  return {(z1 + 1) * r * r, (r - 1) * w + z1 * z2 * r, r + w * w - 3 * w + z1 * z2 * z2, w * w - w + z1 * z2 * z2,
          r * w - w + z1 * z2 * z2};
}

std::vector<ElementIndex> sorted_union(std::vector<ElementIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool z2_admissible(std::uint32_t w, std::uint32_t z2) noexcept {
  if (z2 == 0) return false;
  return z2 == w || z2 + 1 == w;
}

void check_shape_ranges(const PsfShape& shape) {
  if (!nt::is_prime(shape.p)) throw InvalidParameter("p = " + std::to_string(shape.p) + " is not prime");
  if (shape.s < 1 || shape.d < 1) throw InvalidParameter("s and d must be >= 1");
  const auto pd = residue_order(shape);
  if (shape.w < 1 || shape.w > pd) throw InvalidParameter("w must satisfy 1 <= w <= p^d = " + std::to_string(pd));
  if (shape.z1 < 1 || shape.z1 > pd - shape.w + 1) {
    throw InvalidParameter("z1 must satisfy 1 <= z1 <= p^d - w + 1 = " + std::to_string(pd - shape.w + 1));
  }
  if (shape.z2 < 1 || shape.z2 > ring_order(shape)) {
    throw InvalidParameter("z2 must satisfy 1 <= z2 <= p^(sd) = " + std::to_string(ring_order(shape)));
  }
}

DsrgParams psf_parameters(const PsfShape& shape) {
  check_shape_ranges(shape);
  if (!z2_admissible(shape.w, shape.z2)) {
    throw InvalidParameter(shape.w == 1 ? "z2 must be 1 when w = 1" : "z2 must be w-1 or w");
  }
  return unchecked_parameters(shape);
}

PsfFamily::PsfFamily(ChainRing ring, std::size_t m, std::vector<std::vector<ElementIndex>> sets,
                     std::optional<DsrgParams> declared)
    : group_(std::move(ring)), m_(m), sets_(std::move(sets)), declared_(declared) {
  if (sets_.size() != m_ * m_) throw InvalidParameter("family needs m*m sets");
  const auto order = group_.order();
  for (auto& s : sets_) {
    s = sorted_union(std::move(s));
    if (!s.empty() && s.back() >= order) throw InvalidParameter("set element outside the group");
  }
}

PsfFamily build_psf(const ChainRing& ring, const PsfConfig& config, std::uint64_t group_cap) {
  const PsfShape shape{ring.p(), ring.s(), ring.d(), config.w, config.z1, config.z2};
  check_shape_ranges(shape);
  const bool admissible = z2_admissible(config.w, config.z2);
  if (!admissible && !config.force) {
    throw InvalidParameter(config.w == 1 ? "z2 must be 1 when w = 1" : "z2 must be w-1 or w");
  }

  const std::uint32_t pd = ring.residue_size();
  const std::size_t m = std::size_t{config.z1} + 1;
  std::vector<std::uint32_t> starts = config.block_starts;
  if (starts.empty()) {
    for (std::uint32_t i = 0; i < m; ++i) starts.push_back(i);
  }
  if (starts.size() != m) throw InvalidParameter("need exactly z1 + 1 block starts");
  for (std::size_t i = 0; i < m; ++i) {
    if (starts[i] > pd - config.w + 1) {
      throw InvalidParameter("block start " + std::to_string(starts[i]) + " exceeds p^d - w + 1");
    }
    if (i > 0 && starts[i] <= starts[i - 1]) throw InvalidParameter("block starts must be strictly increasing");
  }

  const Spread spread = Spread::build(ring, group_cap);
  const PairGroup& group = spread.group();
  std::map<std::size_t, std::vector<ElementIndex>> reps_by_label;
  std::optional<std::mt19937_64> rng;
  if (config.seed) rng.emplace(*config.seed);

  std::vector<std::vector<ElementIndex>> sets(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<ElementIndex> diag;
    for (std::uint32_t a = starts[i]; a < starts[i] + config.w; ++a) {
      for (auto g : spread.line(a).members) {
        if (g != 0) diag.push_back(g);
      }
    }
    sets[i * m + i] = std::move(diag);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::size_t label = i < j ? starts[i] : starts[i] + config.w - 1;
      auto [it, inserted] = reps_by_label.try_emplace(label);
      if (inserted) it->second = spread.line_cosets(label);
      const auto& reps = it->second;
      std::vector<ElementIndex> chosen;
      if (rng) {
        std::sample(reps.begin(), reps.end(), std::back_inserter(chosen), config.z2, *rng);
      } else {
        chosen.assign(reps.begin(), reps.begin() + config.z2);
      }
      std::vector<ElementIndex> cell;
      cell.reserve(chosen.size() * ring.size());
      for (auto g : chosen) {
        for (auto h : spread.line(label).members) cell.push_back(group.add(g, h));
      }
      sets[i * m + j] = std::move(cell);
    }
  }

  std::optional<DsrgParams> declared;
  if (admissible) declared = unchecked_parameters(shape);
  PsfFamily family(ring, m, std::move(sets), declared);
  family.shape_ = shape;
  return family;
}

Verdict verify_psf(const PsfFamily& family, Backend backend) {
  Verdict verdict;
  const std::size_t m = family.block_count();
  const std::uint32_t n = family.group_order();
  const auto& group = family.group();

  for (std::size_t i = 0; i < m; ++i) {
    const auto& diag = family.set(i, i);
    if (!diag.empty() && diag.front() == 0) {
      verdict.violation = Violation{"identity in a diagonal set", static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(i), 0, 0, 1};
      return verdict;
    }
  }

  std::int64_t k = 0;
  for (std::size_t j = 0; j < m; ++j) k += static_cast<std::int64_t>(family.set(0, j).size());
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
      row += static_cast<std::int64_t>(family.set(i, j).size());
      col += static_cast<std::int64_t>(family.set(j, i).size());
    }
    if (row != k) {
      verdict.violation = Violation{"row sum", static_cast<std::int64_t>(i), -1, -1, k, row};
      return verdict;
    }
    if (col != k) {
      verdict.violation = Violation{"column sum", -1, static_cast<std::int64_t>(i), -1, k, col};
      return verdict;
    }
  }

  auto add = [&group](std::uint32_t x, std::uint32_t y) { return group.add(x, y); };
  auto scan_cell = [&](std::size_t cell) {
    const std::size_t i = cell / m;
    const std::size_t j = cell % m;
    std::vector<std::uint64_t> tally(n, 0);
    for (std::size_t l = 0; l < m; ++l) {
      const auto part = tally_products(family.set(i, l), family.set(l, j), n, add, Backend::serial);
      for (std::uint32_t g = 0; g < n; ++g) tally[g] += part[g];
    }
    std::vector<bool> member(n, false);
    for (auto g : family.set(i, j)) member[g] = true;
    SlotScan scan;
    for (std::uint32_t g = 0; g < n; ++g) {
      const Slot slot = (i == j && g == 0) ? Slot::t : (member[g] ? Slot::lambda : Slot::mu);
      if (!scan.observe(slot, static_cast<std::int64_t>(tally[g]), g)) break;
    }
    return scan;
  };

  std::vector<SlotScan> scans(m * m);
  const auto cells = static_cast<std::int64_t>(m * m);
  if (backend == Backend::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < cells; ++c) scans[static_cast<std::size_t>(c)] = scan_cell(static_cast<std::size_t>(c));
  } else {
    for (std::int64_t c = 0; c < cells; ++c) scans[static_cast<std::size_t>(c)] = scan_cell(static_cast<std::size_t>(c));
  }

  const MergedScan merged = merge_scans(scans);
  if (merged.mismatch) {
    const auto& [cell, mm] = *merged.mismatch;
    static constexpr const char* kNames[] = {"group-ring coefficient at identity (t)",
                                             "group-ring coefficient on S_ij (lambda)",
                                             "group-ring coefficient off S_ij (mu)"};
    verdict.violation = Violation{kNames[static_cast<std::size_t>(mm.slot)], static_cast<std::int64_t>(cell / m),
                                  static_cast<std::int64_t>(cell % m), mm.position, mm.expected, mm.found};
    return verdict;
  }
  verdict.lambda_determined = merged.value[1].has_value();
  verdict.mu_determined = merged.value[2].has_value();
  verdict.params = DsrgParams{static_cast<std::int64_t>(m) * n, k, merged.value[1].value_or(0),
                              merged.value[2].value_or(0), merged.value[0].value_or(0)};
  return verdict;
}

bool is_uniform(const PsfFamily& family) {
  const std::size_t m = family.block_count();
  const std::uint32_t n = family.group_order();
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  std::optional<std::size_t> off_size;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& diag = family.set(i, i);
    if (diag.size() != family.set(0, 0).size()) return false;
    for (auto g : diag) {
      if (g == 0 || seen[g]) return false;
      seen[g] = true;
      ++covered;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (!off_size) off_size = family.set(i, j).size();
      if (family.set(i, j).size() != *off_size) return false;
    }
  }
  return covered == n - 1;
}

PsfFamily build_uniform_psf(std::uint32_t p, std::uint32_t d, std::uint32_t w, std::uint32_t z2) {
  const auto ring = ChainRing::make(p, 1, d);
  const std::uint32_t labels = ring.residue_size() + 1;
  if (w == 0 || labels % w != 0) throw InvalidParameter("w must divide p^d + 1 = " + std::to_string(labels));
  const std::uint32_t m = labels / w;
  if (m < 2) throw InvalidParameter("uniform family needs at least two blocks (w < p^d + 1)");
  PsfConfig config;
  config.w = w;
  config.z1 = m - 1;
  config.z2 = z2;
  for (std::uint32_t i = 0; i < m; ++i) config.block_starts.push_back(w * i);
  return build_psf(ring, config);
}

PsfFamily deleted_family(const PsfFamily& family, std::size_t c) {
  const auto& shape = family.shape();
  if (!shape || family.complemented()) throw InvalidParameter("deleted_family needs a family built by build_psf");
  if (shape->z1 < 2) throw InvalidParameter("deleted_family needs z1 >= 2");
  const std::size_t m = family.block_count();
  if (c >= m) throw InvalidParameter("block index " + std::to_string(c) + " out of range");

  std::vector<std::vector<ElementIndex>> sets;
  sets.reserve((m - 1) * (m - 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (i == c) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != c) sets.push_back(family.set(i, j));
    }
  }
  PsfShape reduced = *shape;
  reduced.z1 -= 1;
  std::optional<DsrgParams> declared;
  if (family.declared()) declared = unchecked_parameters(reduced);
  PsfFamily out(family.ring(), m - 1, std::move(sets), declared);
  out.shape_ = reduced;
  return out;
}

PsfFamily complement_family(const PsfFamily& family) {
  const std::size_t m = family.block_count();
  const std::uint32_t n = family.group_order();
  std::vector<std::vector<ElementIndex>> sets(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<bool> member(n, false);
      for (auto g : family.set(i, j)) member[g] = true;
      auto& out = sets[i * m + j];
      for (std::uint32_t g = (i == j ? 1 : 0); g < n; ++g) {
        if (!member[g]) out.push_back(g);
      }
    }
  }
  std::optional<DsrgParams> declared;
  if (family.declared()) declared = complement_params(*family.declared());
  PsfFamily out(family.ring(), m, std::move(sets), declared);
  out.shape_ = family.shape();
  out.complemented_ = !family.complemented();
  return out;
}

std::vector<RealizableTuple> sweep_parameters(std::uint64_t bound) {
  std::map<DsrgParams, PsfShape> found;
  for (std::uint32_t p = 2; 2 * std::uint64_t{p} * p <= bound; ++p) {
    if (!nt::is_prime(p)) continue;
    for (std::uint32_t sd = 1;; ++sd) {
      const auto r = nt::checked_pow(p, sd);
      if (!r || 2 * *r * *r > bound) break;
      for (std::uint32_t d = 1; d <= sd; ++d) {
        if (sd % d != 0) continue;
        const std::uint32_t s = sd / d;
        const auto pd = static_cast<std::uint32_t>(*nt::checked_pow(p, d));
        for (std::uint32_t w = 1; w <= pd; ++w) {
          for (std::uint32_t z1 = 1; z1 <= pd - w + 1; ++z1) {
            if ((std::uint64_t{z1} + 1) * *r * *r > bound) break;
            for (std::uint32_t z2 : {w - 1, w}) {
              if (!z2_admissible(w, z2)) continue;
              const PsfShape shape{p, s, d, w, z1, z2};
              found.try_emplace(unchecked_parameters(shape), shape);
            }
          }
        }
      }
    }
  }
  std::vector<RealizableTuple> out;
  out.reserve(found.size());
  for (const auto& [params, shape] : found) out.push_back({params, shape});
  return out;
}

}  // namespace dsrg
