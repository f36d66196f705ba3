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

#include "dsrg/params.hpp"

namespace dsrg {

std::string to_string(const DsrgParams& p) {
  return "(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " + std::to_string(p.lambda) + ", " +
         std::to_string(p.mu) + ", " + std::to_string(p.t) + ")";
}

DsrgParams complement_params(const DsrgParams& p) {
  return {p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda, p.v - 2 * p.k + p.t - 1};
}

bool is_genuine(const DsrgParams& p) { return p.t > 0 && p.t < p.k && p.k < p.v - 1; }

bool satisfies_path_count(const DsrgParams& p) {
  return p.k * p.k == p.t + p.lambda * p.k + p.mu * (p.v - 1 - p.k);
}

std::string Violation::describe() const {
  std::string out = what;
  if (row >= 0) out += " at (" + std::to_string(row) + ", " + std::to_string(col) + ")";
  if (element >= 0) out += " element " + std::to_string(element);
  out += ": expected " + std::to_string(expected) + ", found " + std::to_string(found);
  return out;
}

}  // namespace dsrg
