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

#include "dsrg/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dsrg/error.hpp"

namespace dsrg {

void write_edge_list(std::ostream& out, const Digraph& graph) {
  const auto arcs = graph.arcs();
  out << "v " << graph.vertex_count() << " arcs " << arcs.size() << '\n';
  std::string buffer;
  for (const auto& [u, w] : arcs) {
    buffer += std::to_string(u);
    buffer += ' ';
    buffer += std::to_string(w);
    buffer += '\n';
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

namespace {

bool parse_count(std::istringstream& fields, std::uint64_t& value) {
  std::string token;
  if (!(fields >> token) || token.empty()) return false;
  if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18) return false;
  value = std::stoull(token);
  return true;
}

}  // namespace

Digraph read_edge_list(std::istream& in, std::size_t cap) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "empty file (expected \"v <v> arcs <a>\")");
  std::istringstream header(line);
  std::string v_tag;
  std::string arcs_tag;
  std::uint64_t v = 0;
  std::uint64_t a = 0;
  std::string rest;
  if (!(header >> v_tag) || v_tag != "v" || !parse_count(header, v) || !(header >> arcs_tag) || arcs_tag != "arcs" ||
      !parse_count(header, a) || (header >> rest)) {
    throw ParseError(1, "malformed header (expected \"v <v> arcs <a>\")");
  }
  if (v > cap) throw ParseError(1, "vertex count " + std::to_string(v) + " exceeds the cap " + std::to_string(cap));

  Digraph graph(v, cap);
  std::uint64_t seen = 0;
  std::pair<std::uint64_t, std::uint64_t> previous{0, 0};
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::uint64_t u = 0;
    std::uint64_t w = 0;
    if (!parse_count(fields, u) || !parse_count(fields, w) || (fields >> rest)) {
      throw ParseError(line_no, "expected \"u w\"");
    }
    if (u >= v || w >= v) throw ParseError(line_no, "vertex out of range");
    if (u == w) throw ParseError(line_no, "loop arc");
    const std::pair<std::uint64_t, std::uint64_t> current{u, w};
    if (seen > 0 && current <= previous) throw ParseError(line_no, "arcs not in strictly increasing order");
    previous = current;
    graph.add_arc(u, w);
    ++seen;
  }
  if (seen != a) {
    throw ParseError(line_no, "header announces " + std::to_string(a) + " arcs, file has " + std::to_string(seen));
  }
  return graph;
}

nlohmann::ordered_json family_to_json(const PsfFamily& family) {
  nlohmann::ordered_json doc;
  doc["p"] = family.ring().p();
  doc["s"] = family.ring().s();
  doc["d"] = family.ring().d();
  const std::size_t m = family.block_count();
  doc["m"] = m;
  auto sets = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m; ++j) row.push_back(family.set(i, j));
    sets.push_back(std::move(row));
  }
  doc["sets"] = std::move(sets);
  if (const auto& p = family.declared()) {
    doc["params"] = {p->v, p->k, p->lambda, p->mu, p->t};
  } else {
    doc["params"] = nullptr;
  }
  return doc;
}

PsfFamily family_from_json(const nlohmann::json& doc) {
  try {
    const auto ring = ChainRing::make(doc.at("p").get<std::uint32_t>(), doc.at("s").get<std::uint32_t>(),
                                      doc.at("d").get<std::uint32_t>());
    const auto m = doc.at("m").get<std::size_t>();
    const auto& rows = doc.at("sets");
    if (!rows.is_array() || rows.size() != m) throw InvalidParameter("\"sets\" must be an m x m array");
    std::vector<std::vector<ElementIndex>> sets;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != m) throw InvalidParameter("\"sets\" must be an m x m array");
      for (const auto& cell : row) sets.push_back(cell.get<std::vector<ElementIndex>>());
    }
    std::optional<DsrgParams> declared;
    if (doc.contains("params") && !doc.at("params").is_null()) {
      const auto v = doc.at("params").get<std::vector<std::int64_t>>();
      if (v.size() != 5) throw InvalidParameter("\"params\" must have five entries");
      declared = DsrgParams{v[0], v[1], v[2], v[3], v[4]};
    }
    return PsfFamily(ring, m, std::move(sets), declared);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed family JSON: ") + e.what());
  }
}

nlohmann::ordered_json report_json(const Verdict& verdict) {
  nlohmann::ordered_json doc;
  if (verdict.ok()) {
    const auto& p = *verdict.params;
    doc["v"] = p.v;
    doc["k"] = p.k;
    doc["lambda"] = p.lambda;
    doc["mu"] = p.mu;
    doc["t"] = p.t;
    doc["genuine"] = is_genuine(p);
    return doc;
  }
  const auto& w = *verdict.violation;
  doc["violation"] = {{"what", w.what},         {"row", w.row},           {"col", w.col},
                      {"element", w.element}, {"expected", w.expected}, {"found", w.found}};
  return doc;
}

}  // namespace dsrg
