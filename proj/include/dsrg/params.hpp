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
#include <optional>
#include <string>

namespace dsrg {

/// Parameters (v, k, lambda, mu, t) of a directed strongly regular graph.
struct DsrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  std::int64_t t = 0;

  auto operator<=>(const DsrgParams&) const = default;
};

/// "(v, k, lambda, mu, t)"
std::string to_string(const DsrgParams& params);

/// Parameters of the complementary digraph.
DsrgParams complement_params(const DsrgParams& params);

/// Not complete, not undirected (t != k), not a doubly regular tournament (t != 0).
bool is_genuine(const DsrgParams& params);

/// k^2 = t + lambda k + mu (v - 1 - k), the double count of 2-paths from a vertex.
bool satisfies_path_count(const DsrgParams& params);

/// Where and how a verification failed. Coordinates are (row, col) of the
/// adjacency square or (i, j) of a family cell; element is a group index when
/// relevant and -1 otherwise.
struct Violation {
  std::string what;
  std::int64_t row = -1;
  std::int64_t col = -1;
  std::int64_t element = -1;
  std::int64_t expected = 0;
  std::int64_t found = 0;

  std::string describe() const;
};

/// Outcome of a verification: recovered parameters or a witness.
/// A constant that no pair exercises (lambda in an arcless graph, mu in a
/// complete one) is reported as 0 with its flag cleared.
struct Verdict {
  std::optional<DsrgParams> params;
  std::optional<Violation> violation;
  bool lambda_determined = true;
  bool mu_determined = true;

  bool ok() const noexcept { return params.has_value(); }
};

}  // namespace dsrg
