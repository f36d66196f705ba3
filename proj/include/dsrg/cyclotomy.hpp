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
#include <string>
#include <vector>

#include "dsrg/field.hpp"

namespace dsrg {

/// Cyclotomic classes C_i = omega^i <omega^e> of F_q^*, 0 <= i < e.
struct CyclotomicSetup {
  FiniteField field;
  std::uint32_t e = 0;
  std::uint32_t f = 0;
  std::vector<std::vector<ElementIndex>> classes;  // each sorted
  /// Class of every field element; -1 for zero.
  std::vector<std::int32_t> class_of;

  std::uint32_t q() const noexcept { return field.order(); }
  ElementIndex omega() const noexcept { return field.primitive(); }
  /// Class containing -1.
  std::uint32_t class_of_minus_one() const;
};

/// Requires q a prime power, e | q - 1, e > 1 and f = (q-1)/e > 1.
CyclotomicSetup make_cyclotomic_setup(std::uint64_t q, std::uint32_t e);

/// e x e matrix of (i, j)_e = |(C_i + 1) ∩ C_j|, row-major.
struct CyclotomicTable {
  std::uint32_t e = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::uint32_t i, std::uint32_t j) const { return entries.at(i * e + j); }
  bool operator==(const CyclotomicTable&) const = default;
};

CyclotomicTable cyclotomic_numbers_bruteforce(const CyclotomicSetup& setup);

/// q = s^2 + 4t^2 with s = 1 mod 4 and gcd(p, s) = 1; t >= 0 here.
struct QuadDecomp {
  std::int64_t s;
  std::int64_t t;
};

/// q = a^2 + 3b^2 with a = 1 mod 3 and gcd(p, a) = 1; sign of b as resolved.
struct SexticDecomp {
  std::int64_t a;
  std::int64_t b;
};

std::optional<QuadDecomp> decompose_e4(std::uint64_t q);

/// Order-4 numbers from the closed formulas (f even, p = 1 mod 4). The sign of
/// t is not fixed by the formulas; the sign whose table matches the brute
/// force count for the canonical omega is returned.
CyclotomicTable table_e4(std::uint64_t q, QuadDecomp* used = nullptr);

/// Order-4 table from the closed formulas for a given (s, t).
CyclotomicTable table_e4_formula(std::uint64_t q, QuadDecomp decomp);

/// Order-6 numbers from the closed formulas (f even, 2 a cube in F_q); the
/// sign of b is fixed by omega^{(q-1)/3} = -(a+b)/(a-b) mod p.
CyclotomicTable table_e6(std::uint64_t q, SexticDecomp* used = nullptr);

CyclotomicTable table_e6_formula(std::uint64_t q, SexticDecomp decomp);

/// Witness for a failed Schur-ring relation: the element whose coefficient
/// in C_0 C_i differs from the prediction.
struct SchurResult {
  bool ok = true;
  ElementIndex element = 0;
  std::int64_t expected = 0;
  std::int64_t found = 0;
};

/// C_0 C_i = sum_k (i,k) C_k + |C_0 ∩ -C_i| [0], checked by exact convolution.
SchurResult schur_check(const CyclotomicSetup& setup, std::uint32_t i);

/// Aligned text rendering, one row per line.
std::string format_table(const CyclotomicTable& table);

}  // namespace dsrg
