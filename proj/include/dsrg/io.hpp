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

#include <iosfwd>

#include "json.hpp"

#include "dsrg/digraph.hpp"
#include "dsrg/psf.hpp"

namespace dsrg {

/// "v <v> arcs <a>" followed by one "u w" line per arc in lexicographic order.
void write_edge_list(std::ostream& out, const Digraph& graph);

/// Strict reader for write_edge_list's format; throws ParseError with the
/// offending line number.
Digraph read_edge_list(std::istream& in, std::size_t cap = kDefaultAdjacencyCap);

/// {"p","s","d","m","sets":[[[index,...],...],...],"params":[v,k,lambda,mu,t] or null}
nlohmann::ordered_json family_to_json(const PsfFamily& family);
PsfFamily family_from_json(const nlohmann::json& doc);

/// {"v","k","lambda","mu","t","genuine"} on success, {"violation":{...}} otherwise.
nlohmann::ordered_json report_json(const Verdict& verdict);

}  // namespace dsrg
