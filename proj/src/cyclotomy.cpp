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

#include "dsrg/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dsrg/error.hpp"
#include "dsrg/kernels.hpp"
#include "dsrg/numtheory.hpp"

namespace dsrg {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string("non-integral cyclotomic number ") + what);
  return num / den;
}

nt::PrimePower require_prime_power(std::uint64_t q) {
  const auto pp = nt::as_prime_power(q);
  if (!pp) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

}  // namespace

std::uint32_t CyclotomicSetup::class_of_minus_one() const {
  return static_cast<std::uint32_t>(class_of[field.neg(field.one())]);
}

CyclotomicSetup make_cyclotomic_setup(std::uint64_t q, std::uint32_t e) {
  require_prime_power(q);
  if (e < 2 || (q - 1) % e != 0) throw InvalidParameter("e must divide q - 1 with e > 1");
  const auto f = static_cast<std::uint32_t>((q - 1) / e);
  if (f < 2) throw InvalidParameter("f = (q-1)/e must exceed 1");

  CyclotomicSetup setup{FiniteField::make(q), e, f, {}, {}};
  setup.classes.assign(e, {});
  setup.class_of.assign(q, -1);
  for (std::uint32_t i = 0; i < e; ++i) {
    auto& cls = setup.classes[i];
    cls.reserve(f);
    for (std::uint32_t j = 0; j < f; ++j) {
      const auto x = setup.field.power_of_primitive(std::int64_t{i} + std::int64_t{e} * j);
      cls.push_back(x);
      setup.class_of[x] = static_cast<std::int32_t>(i);
    }
    std::sort(cls.begin(), cls.end());
  }
  return setup;
}

CyclotomicTable cyclotomic_numbers_bruteforce(const CyclotomicSetup& setup) {
  CyclotomicTable table{setup.e, std::vector<std::int64_t>(std::size_t{setup.e} * setup.e, 0)};
  const auto one = setup.field.one();
  for (std::uint32_t i = 0; i < setup.e; ++i) {
    for (auto c : setup.classes[i]) {
      const auto j = setup.class_of[setup.field.add(c, one)];
      if (j >= 0) ++table.entries[i * setup.e + static_cast<std::uint32_t>(j)];
    }
  }
  return table;
}

std::optional<QuadDecomp> decompose_e4(std::uint64_t q) {
  const auto pp = require_prime_power(q);
  const auto p = static_cast<std::int64_t>(pp.p);
  for (std::uint64_t t = 0; 4 * t * t <= q; ++t) {
    const std::uint64_t rest = q - 4 * t * t;
    if (!nt::is_square(rest)) continue;
    const auto root = static_cast<std::int64_t>(nt::isqrt(rest));
    for (std::int64_t s : {root, -root}) {
      if (floor_mod(s, 4) == 1 && std::gcd(p, s < 0 ? -s : s) == 1) return QuadDecomp{s, static_cast<std::int64_t>(t)};
    }
  }
  return std::nullopt;
}

CyclotomicTable table_e4_formula(std::uint64_t q, QuadDecomp dec) {
  const auto Q = static_cast<std::int64_t>(q);
  const std::int64_t s = dec.s;
  const std::int64_t t = dec.t;
  const auto c00 = exact_div(Q - 11 - 6 * s, 16, "(0,0)");
  const auto c01 = exact_div(Q - 3 + 2 * s + 8 * t, 16, "(0,1)");
  const auto c02 = exact_div(Q - 3 + 2 * s, 16, "(0,2)");
  const auto c03 = exact_div(Q - 3 + 2 * s - 8 * t, 16, "(0,3)");
  const auto c12 = exact_div(Q + 1 - 2 * s, 16, "(1,2)");
  return CyclotomicTable{4, {c00, c01, c02, c03,  //
                             c01, c03, c12, c12,  //
                             c02, c12, c02, c12,  //
                             c03, c12, c12, c01}};
}

CyclotomicTable table_e4(std::uint64_t q, QuadDecomp* used) {
  const auto pp = require_prime_power(q);
  if (q % 4 != 1) throw InvalidParameter("order-4 formulas need q = 1 mod 4");
  if (((q - 1) / 4) % 2 != 0) throw InvalidParameter("order-4 formulas need f = (q-1)/4 even");
  if (pp.p % 4 != 1) throw InvalidParameter("order-4 formulas need p = 1 mod 4");
  const auto dec = decompose_e4(q);
  if (!dec) throw std::logic_error("no decomposition q = s^2 + 4t^2 for q = " + std::to_string(q));

  const auto brute = cyclotomic_numbers_bruteforce(make_cyclotomic_setup(q, 4));
  for (std::int64_t sign : {1, -1}) {
    const QuadDecomp candidate{dec->s, sign * dec->t};
    auto table = table_e4_formula(q, candidate);
    if (table == brute) {
      if (used) *used = candidate;
      return table;
    }
  }
  throw std::logic_error("order-4 formulas disagree with brute force for both signs of t at q = " + std::to_string(q));
}

CyclotomicTable table_e6_formula(std::uint64_t q, SexticDecomp dec) {
  const auto Q = static_cast<std::int64_t>(q);
  const std::int64_t a = dec.a;
  const std::int64_t b = dec.b;
  const auto c00 = exact_div(Q - 17 - 20 * a, 36, "(0,0)");
  const auto c01 = exact_div(Q - 5 + 4 * a + 18 * b, 36, "(0,1)");
  const auto c02 = exact_div(Q - 5 + 4 * a + 6 * b, 36, "(0,2)");
  const auto c03 = exact_div(Q - 5 + 4 * a, 36, "(0,3)");
  const auto c04 = exact_div(Q - 5 + 4 * a - 6 * b, 36, "(0,4)");
  const auto c05 = exact_div(Q - 5 + 4 * a - 18 * b, 36, "(0,5)");
  const auto c12 = exact_div(Q + 1 - 2 * a, 36, "(1,2)");
  return CyclotomicTable{6, {c00, c01, c02, c03, c04, c05,  //
                             c01, c05, c12, c12, c12, c12,  //
                             c02, c12, c04, c12, c12, c12,  //
                             c03, c12, c12, c03, c12, c12,  //
                             c04, c12, c12, c12, c02, c12,  //
                             c05, c12, c12, c12, c12, c01}};
}

CyclotomicTable table_e6(std::uint64_t q, SexticDecomp* used) {
  const auto pp = require_prime_power(q);
  if (q % 6 != 1) throw InvalidParameter("order-6 formulas need q = 1 mod 6");
  if (((q - 1) / 6) % 2 != 0) throw InvalidParameter("order-6 formulas need f = (q-1)/6 even");
  const auto field = FiniteField::make(q);
  if (field.pow(field.from_integer(2), (q - 1) / 3) != field.one()) {
    throw InvalidParameter("order-6 formulas need 2 to be a cube in F_q");
  }
  const auto cube_root = field.prime_subfield_value(field.power_of_primitive(static_cast<std::int64_t>((q - 1) / 3)));
  if (!cube_root) throw InvalidParameter("omega^((q-1)/3) is not in the prime field");

  const auto p = static_cast<std::int64_t>(pp.p);
  const auto c = static_cast<std::int64_t>(*cube_root);
  for (std::uint64_t b = 1; 3 * b * b <= q; ++b) {
    const std::uint64_t rest = q - 3 * b * b;
    if (!nt::is_square(rest)) continue;
    const auto root = static_cast<std::int64_t>(nt::isqrt(rest));
    for (std::int64_t a : {root, -root}) {
      if (floor_mod(a, 3) != 1 || std::gcd(p, a < 0 ? -a : a) != 1) continue;
      for (std::int64_t sb : {static_cast<std::int64_t>(b), -static_cast<std::int64_t>(b)}) {
        // omega^((q-1)/3) (a - b) = -(a + b) mod p
        if (floor_mod(c * (a - sb) + (a + sb), p) != 0) continue;
        if (used) *used = SexticDecomp{a, sb};
        return table_e6_formula(q, SexticDecomp{a, sb});
      }
    }
  }
  throw std::logic_error("no decomposition q = a^2 + 3b^2 matching omega for q = " + std::to_string(q));
}

SchurResult schur_check(const CyclotomicSetup& setup, std::uint32_t i) {
  if (i >= setup.e) throw InvalidParameter("class index out of range");
  const auto table = cyclotomic_numbers_bruteforce(setup);
  const auto& field = setup.field;
  const auto tally = tally_products(
      setup.classes[0], setup.classes[i], setup.q(),
      [&field](std::uint32_t x, std::uint32_t y) { return field.add(x, y); }, Backend::serial);

  std::int64_t at_zero = 0;
  for (auto c : setup.classes[0]) {
    if (setup.class_of[field.neg(c)] == static_cast<std::int32_t>(i)) ++at_zero;
  }
  for (ElementIndex x = 0; x < setup.q(); ++x) {
    const std::int64_t expected = x == 0 ? at_zero : table.at(i, static_cast<std::uint32_t>(setup.class_of[x]));
    const auto found = static_cast<std::int64_t>(tally[x]);
    if (expected != found) return SchurResult{false, x, expected, found};
  }
  return SchurResult{};
}

std::string format_table(const CyclotomicTable& table) {
  std::size_t width = 1;
  for (auto v : table.entries) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (std::uint32_t i = 0; i < table.e; ++i) {
    for (std::uint32_t j = 0; j < table.e; ++j) {
      const auto cell = std::to_string(table.at(i, j));
      if (j > 0) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace dsrg
