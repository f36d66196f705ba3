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

// Exact counting kernels behind the verifiers. Each kernel has an OpenMP
// version and a serial reference that takes an independent route; tests and
// bench/ compare the two.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsrg {

enum class Backend { parallel, serial };

/// Dense 0/1 matrix with rows packed into 64-bit words.
class BitRows {
 public:
  BitRows() = default;
  BitRows(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept { return (data_[r * words_ + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void reset(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

  std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }

  std::size_t row_count(std::size_t r) const noexcept {
    std::size_t n = 0;
    for (auto w : row(r)) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Column indices set in row r, increasing.
  std::vector<std::uint32_t> row_indices(std::size_t r) const;

  BitRows transpose() const;

  bool operator==(const BitRows&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// The three constants of A^2 = tI + lambda A + mu (J - I - A), or of the
/// group-ring analogue mu G + beta S + gamma e.
enum class Slot : std::size_t { t = 0, lambda = 1, mu = 2 };

/// First value observed per slot inside one scanned unit (an adjacency row or a
/// family cell), and the first disagreement inside that unit.
struct SlotScan {
  struct Seen {
    std::int64_t value;
    std::int64_t position;
  };
  struct Mismatch {
    Slot slot;
    std::int64_t position;
    std::int64_t expected;
    std::int64_t found;
  };

  std::array<std::optional<Seen>, 3> first;
  std::optional<Mismatch> mismatch;

  /// Records value at position; returns false on the first disagreement.
  bool observe(Slot slot, std::int64_t value, std::int64_t position) {
    auto& seen = first[static_cast<std::size_t>(slot)];
    if (!seen) {
      seen = Seen{value, position};
      return true;
    }
    if (seen->value == value) return true;
    if (!mismatch) mismatch = Mismatch{slot, position, seen->value, value};
    return false;
  }
};

/// Merged view of a sequence of scans, in unit order.
struct MergedScan {
  std::array<std::optional<std::int64_t>, 3> value;
  /// (unit, mismatch) of the first disagreement, within or across units.
  std::optional<std::pair<std::size_t, SlotScan::Mismatch>> mismatch;
};

MergedScan merge_scans(std::span<const SlotScan> scans);

/// Classifies every entry of A^2: diagonal -> t, arc -> lambda, non-arc -> mu.
/// One scan per row. Parallel: popcount(row_u AND column_y) over bit-packed
/// rows. Serial: accumulate rows of the out-neighbours of u.
std::vector<SlotScan> scan_square_rows(const BitRows& a, Backend backend);
/// Rows [begin, end) only; columns must equal a.transpose().
std::vector<SlotScan> scan_square_rows(const BitRows& a, const BitRows& columns, std::size_t begin, std::size_t end,
                                       Backend backend);

/// (A^2)_{u,*} by the serial neighbour-sum route, for tests.
std::vector<std::uint32_t> square_row_reference(const BitRows& a, std::size_t u);

/// Multiset {op(x, y) : x in lhs, y in rhs} as a tally over [0, order).
/// The parallel version keeps one tally per thread and sums them at the end.
template <class Op>
std::vector<std::uint64_t> tally_products(std::span<const std::uint32_t> lhs, std::span<const std::uint32_t> rhs,
                                          std::size_t order, Op op, Backend backend) {
  std::vector<std::uint64_t> tally(order, 0);
  if (backend == Backend::serial) {
    for (auto x : lhs) {
      for (auto y : rhs) ++tally[op(x, y)];
    }
    return tally;
  }
  const auto n = static_cast<std::int64_t>(lhs.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(order, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto x = lhs[static_cast<std::size_t>(i)];
      for (auto y : rhs) ++local[op(x, y)];
    }
#pragma omp critical(dsrg_tally_merge)
    for (std::size_t g = 0; g < order; ++g) tally[g] += local[g];
  }
  return tally;
}

}  // namespace dsrg
