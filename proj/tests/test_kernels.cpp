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

#include <random>

#include "doctest.h"
#include "dsrg/kernels.hpp"

using namespace dsrg;

namespace {

BitRows random_rows(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BitRows a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c && coin(rng)) a.set(r, c);
    }
  }
  return a;
}

bool same_scan(const SlotScan& x, const SlotScan& y) {
  for (std::size_t s = 0; s < 3; ++s) {
    if (x.first[s].has_value() != y.first[s].has_value()) return false;
    if (x.first[s] && (x.first[s]->value != y.first[s]->value || x.first[s]->position != y.first[s]->position)) return false;
  }
  if (x.mismatch.has_value() != y.mismatch.has_value()) return false;
  return !x.mismatch || (x.mismatch->slot == y.mismatch->slot && x.mismatch->position == y.mismatch->position &&
                         x.mismatch->expected == y.mismatch->expected && x.mismatch->found == y.mismatch->found);
}

}  // namespace

TEST_CASE("BitRows basics") {
  BitRows a(3, 130);
  a.set(1, 0);
  a.set(1, 64);
  a.set(1, 129);
  CHECK(a.words_per_row() == 3);
  CHECK(a.row_count(1) == 3);
  CHECK(a.row_indices(1) == std::vector<std::uint32_t>{0, 64, 129});
  a.reset(1, 64);
  CHECK_FALSE(a.test(1, 64));
  const auto t = a.transpose();
  CHECK(t.rows() == 130);
  CHECK(t.test(129, 1));
  CHECK(t.transpose() == a);
}

TEST_CASE("SlotScan records the first disagreement") {
  SlotScan s;
  CHECK(s.observe(Slot::mu, 4, 0));
  CHECK(s.observe(Slot::mu, 4, 1));
  CHECK_FALSE(s.observe(Slot::mu, 5, 2));
  CHECK_FALSE(s.observe(Slot::mu, 6, 3));
  REQUIRE(s.mismatch.has_value());
  CHECK(s.mismatch->position == 2);
  CHECK(s.mismatch->found == 5);
}

TEST_CASE("merge_scans detects disagreement across units") {
  std::vector<SlotScan> scans(3);
  scans[0].observe(Slot::t, 3, 0);
  scans[1].observe(Slot::t, 3, 1);
  scans[2].observe(Slot::t, 2, 2);
  const auto m = merge_scans(scans);
  REQUIRE(m.mismatch.has_value());
  CHECK(m.mismatch->first == 2);
  CHECK(m.mismatch->second.expected == 3);
  CHECK(m.mismatch->second.found == 2);

  std::vector<SlotScan> fine(2);
  fine[0].observe(Slot::lambda, 1, 0);
  fine[1].observe(Slot::mu, 2, 5);
  const auto ok = merge_scans(fine);
  CHECK_FALSE(ok.mismatch.has_value());
  CHECK(ok.value[1] == 1);
  CHECK(ok.value[2] == 2);
  CHECK_FALSE(ok.value[0].has_value());
}

TEST_CASE("square_row_reference matches a direct count") {
  const auto a = random_rows(70, 0.3, 1);
  for (std::size_t u = 0; u < 70; u += 9) {
    const auto row = square_row_reference(a, u);
    for (std::size_t y = 0; y < 70; ++y) {
      std::uint32_t paths = 0;
      for (std::size_t z = 0; z < 70; ++z) paths += (a.test(u, z) && a.test(z, y)) ? 1 : 0;
      CHECK(row[y] == paths);
    }
  }
}

TEST_CASE("property: parallel and serial row scans agree on random digraphs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 20 + 37 * seed;
    const auto a = random_rows(n, 0.1 + 0.05 * static_cast<double>(seed % 5), seed);
    const auto par = scan_square_rows(a, Backend::parallel);
    const auto ser = scan_square_rows(a, Backend::serial);
    REQUIRE(par.size() == n);
    for (std::size_t u = 0; u < n; ++u) CHECK(same_scan(par[u], ser[u]));
  }
}

TEST_CASE("property: parallel and serial product tallies agree") {
  std::mt19937 rng(3);
  for (int round = 0; round < 10; ++round) {
    const std::uint32_t order = 50 + 31 * static_cast<std::uint32_t>(round);
    std::uniform_int_distribution<std::uint32_t> pick(0, order - 1);
    std::vector<std::uint32_t> lhs(200), rhs(150);
    for (auto& x : lhs) x = pick(rng);
    for (auto& x : rhs) x = pick(rng);
    auto op = [order](std::uint32_t x, std::uint32_t y) { return (x * 7 + y) % order; };
    const auto par = tally_products(std::span<const std::uint32_t>(lhs), rhs, order, op, Backend::parallel);
    const auto ser = tally_products(std::span<const std::uint32_t>(lhs), rhs, order, op, Backend::serial);
    CHECK(par == ser);
    std::uint64_t total = 0;
    for (auto c : par) total += c;
    CHECK(total == lhs.size() * rhs.size());
  }
}

TEST_CASE("row-range scans match the full scan") {
  const auto a = random_rows(300, 0.2, 5);
  const auto cols = a.transpose();
  const auto full = scan_square_rows(a, Backend::parallel);
  for (auto [begin, end] : {std::pair<std::size_t, std::size_t>{0, 300}, {17, 90}, {256, 400}, {299, 299}}) {
    const auto part = scan_square_rows(a, cols, begin, end, Backend::parallel);
    const auto ser = scan_square_rows(a, cols, begin, end, Backend::serial);
    REQUIRE(part.size() == std::min<std::size_t>(end, 300) - std::min<std::size_t>(begin, 300));
    for (std::size_t i = 0; i < part.size(); ++i) {
      CHECK(same_scan(part[i], full[begin + i]));
      CHECK(same_scan(ser[i], full[begin + i]));
    }
  }
}
