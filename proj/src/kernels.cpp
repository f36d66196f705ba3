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

#include "dsrg/kernels.hpp"

#include <algorithm>

namespace dsrg {

std::vector<std::uint32_t> BitRows::row_indices(std::size_t r) const {
  std::vector<std::uint32_t> out;
  const auto words = row(r);
  for (std::size_t w = 0; w < words.size(); ++w) {
    auto bits = words[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

BitRows BitRows::transpose() const {
  BitRows t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : row_indices(r)) t.set(c, r);
  }
  return t;
}

MergedScan merge_scans(std::span<const SlotScan> scans) {
  MergedScan merged;
  for (std::size_t unit = 0; unit < scans.size(); ++unit) {
    const auto& scan = scans[unit];
    for (std::size_t slot = 0; slot < 3; ++slot) {
      const auto& seen = scan.first[slot];
      if (!seen) continue;
      auto& value = merged.value[slot];
      if (!value) {
        value = seen->value;
      } else if (*value != seen->value && !merged.mismatch) {
        merged.mismatch = {unit, SlotScan::Mismatch{static_cast<Slot>(slot), seen->position, *value, seen->value}};
      }
    }
    if (scan.mismatch && !merged.mismatch) merged.mismatch = {unit, *scan.mismatch};
    if (merged.mismatch) break;
  }
  return merged;
}

namespace {

void classify_row(const BitRows& a, std::size_t u, std::span<const std::uint32_t> counts, SlotScan& scan) {
  for (std::size_t y = 0; y < counts.size(); ++y) {
    const Slot slot = (y == u) ? Slot::t : (a.test(u, y) ? Slot::lambda : Slot::mu);
    if (!scan.observe(slot, counts[y], static_cast<std::int64_t>(y))) return;
  }
}

}  // namespace

std::vector<std::uint32_t> square_row_reference(const BitRows& a, std::size_t u) {
  std::vector<std::uint32_t> counts(a.cols(), 0);
  for (auto z : a.row_indices(u)) {
    for (auto y : a.row_indices(z)) ++counts[y];
  }
  return counts;
}

std::vector<SlotScan> scan_square_rows(const BitRows& a, Backend backend) {
  return scan_square_rows(a, a.transpose(), 0, a.rows(), backend);
}

std::vector<SlotScan> scan_square_rows(const BitRows& a, const BitRows& columns, std::size_t begin, std::size_t end,
                                       Backend backend) {
  const std::size_t v = a.rows();
  end = std::min(end, v);
  begin = std::min(begin, end);
  std::vector<SlotScan> scans(end - begin);
  if (backend == Backend::serial) {
    for (std::size_t u = begin; u < end; ++u) classify_row(a, u, square_row_reference(a, u), scans[u - begin]);
    return scans;
  }
  const std::size_t words = a.words_per_row();
  const auto first = static_cast<std::int64_t>(begin);
  const auto last = static_cast<std::int64_t>(end);
#pragma omp parallel
  {
    std::vector<std::uint32_t> counts(v);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ui = first; ui < last; ++ui) {
      const auto u = static_cast<std::size_t>(ui);
      const std::uint64_t* row = a.row(u).data();
      for (std::size_t y = 0; y < v; ++y) {
        const std::uint64_t* col = columns.row(y).data();
        std::uint32_t c = 0;
        for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint32_t>(std::popcount(row[w] & col[w]));
        counts[y] = c;
      }
      classify_row(a, u, counts, scans[u - begin]);
    }
  }
  return scans;
}

}  // namespace dsrg
