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

#include "dsrg/spread.hpp"

#include <algorithm>
#include <string>

#include "dsrg/error.hpp"

namespace dsrg {

Spread Spread::build(const ChainRing& ring, std::uint64_t group_cap) {
  const std::uint64_t n = ring.size();
  if (n * n > group_cap) {
    throw SizeCapExceeded("group order |G| = " + std::to_string(n * n) + " exceeds the size cap " +
                          std::to_string(group_cap));
  }
  Spread spread{PairGroup(ring)};
  const auto count = static_cast<ElementIndex>(n);

  SpreadLine infinite;
  infinite.members.reserve(count);
  for (ElementIndex x = 0; x < count; ++x) infinite.members.push_back(group_index(ring, 0, x));
  spread.lines_.push_back(std::move(infinite));

  for (auto& slope : ring.coset_reps()) {
    SpreadLine line;
    line.members.reserve(count);
    const auto a = ring.index_of(slope);
    for (ElementIndex x = 0; x < count; ++x) line.members.push_back(group_index(ring, x, ring.mul_index(a, x)));
    std::sort(line.members.begin(), line.members.end());
    line.slope = std::move(slope);
    spread.lines_.push_back(std::move(line));
  }
  return spread;
}

const SpreadLine& Spread::line(std::size_t label) const {
  if (label >= lines_.size()) {
    throw InvalidParameter("unknown spread label " + std::to_string(label) + " (have " +
                           std::to_string(lines_.size()) + " lines)");
  }
  return lines_[label];
}

std::vector<ElementIndex> Spread::line_cosets(std::size_t label) const {
  const auto& members = line(label).members;
  const auto order = group_order();
  std::vector<bool> covered(order, false);
  std::vector<ElementIndex> reps;
  reps.reserve(order / members.size());
  for (ElementIndex g = 0; g < order; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (auto h : members) covered[group_.add(g, h)] = true;
  }
  return reps;
}

bool Spread::product_is_G(std::size_t a, std::size_t b) const {
  if (a == b) throw InvalidParameter("product_is_G needs two distinct spread labels");
  const auto& la = line(a).members;
  const auto& lb = line(b).members;
  std::vector<std::uint32_t> hits(group_order(), 0);
  for (auto x : la) {
    for (auto y : lb) ++hits[group_.add(x, y)];
  }
  return std::all_of(hits.begin(), hits.end(), [](std::uint32_t c) { return c == 1; });
}

}  // namespace dsrg
