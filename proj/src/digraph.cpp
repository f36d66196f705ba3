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

#include "dsrg/digraph.hpp"

#include <bit>

namespace dsrg {

Digraph::Digraph(std::size_t v, std::size_t cap) {
  if (v > cap) {
    throw SizeCapExceeded("vertex count " + std::to_string(v) + " exceeds the adjacency cap " + std::to_string(cap));
  }
  adj_ = BitRows(v, v);
}

void Digraph::add_arc(std::size_t u, std::size_t w) {
  const auto v = vertex_count();
  if (u >= v || w >= v) throw InvalidParameter("arc endpoint out of range");
  if (u == w) throw InvalidParameter("loop at vertex " + std::to_string(u));
  adj_.set(u, w);
}

void Digraph::remove_arc(std::size_t u, std::size_t w) {
  if (u < vertex_count() && w < vertex_count()) adj_.reset(u, w);
}

std::vector<std::size_t> Digraph::in_degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (auto w : adj_.row_indices(u)) ++deg[w];
  }
  return deg;
}

std::uint64_t Digraph::arc_count() const noexcept {
  std::uint64_t n = 0;
  for (std::size_t u = 0; u < vertex_count(); ++u) n += adj_.row_count(u);
  return n;
}

std::uint64_t Digraph::undirected_edge_count() const {
  std::uint64_t n = 0;
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (auto w : adj_.row_indices(u)) {
      if (w > u && adj_.test(w, u)) ++n;
    }
  }
  return n;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Digraph::arcs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(arc_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (auto w : adj_.row_indices(u)) out.emplace_back(static_cast<std::uint32_t>(u), w);
  }
  return out;
}

Digraph difference_digraph(const PsfFamily& family, std::size_t cap) {
  const std::size_t m = family.block_count();
  const std::uint32_t n = family.group_order();
  const auto& group = family.group();
  Digraph graph(m * n, cap);
  // x - y = s  <=>  y = x - s
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& cell = family.set(i, j);
      std::vector<ElementIndex> negated;
      negated.reserve(cell.size());
      for (auto s : cell) negated.push_back(group.neg(s));
      for (std::uint32_t x = 0; x < n; ++x) {
        for (auto ns : negated) graph.add_arc(i * n + x, j * n + group.add(x, ns));
      }
    }
  }
  return graph;
}

Verdict verify_dsrg(const Digraph& graph, Backend backend) {
  Verdict verdict;
  const std::size_t v = graph.vertex_count();
  const auto& adj = graph.adjacency();
  const auto k = static_cast<std::int64_t>(v == 0 ? 0 : graph.out_degree(0));

  for (std::size_t u = 0; u < v; ++u) {
    if (adj.test(u, u)) {
      verdict.violation = Violation{"loop", static_cast<std::int64_t>(u), static_cast<std::int64_t>(u), -1, 0, 1};
      return verdict;
    }
    const auto out = static_cast<std::int64_t>(graph.out_degree(u));
    if (out != k) {
      verdict.violation = Violation{"out-degree", static_cast<std::int64_t>(u), -1, -1, k, out};
      return verdict;
    }
  }
  const auto in = graph.in_degrees();
  for (std::size_t u = 0; u < v; ++u) {
    if (static_cast<std::int64_t>(in[u]) != k) {
      verdict.violation = Violation{"in-degree", -1, static_cast<std::int64_t>(u), -1, k,
                                    static_cast<std::int64_t>(in[u])};
      return verdict;
    }
  }

  // Rows go in chunks so a violation ends the scan early. Earlier chunks were
  // clean, so the witness is the same one a full scan would report.
  constexpr std::size_t kChunk = 256;
  const BitRows columns = adj.transpose();
  std::vector<SlotScan> scans;
  scans.reserve(v);
  MergedScan merged;
  for (std::size_t begin = 0; begin < v; begin += kChunk) {
    auto part = scan_square_rows(adj, columns, begin, begin + kChunk, backend);
    scans.insert(scans.end(), part.begin(), part.end());
    merged = merge_scans(scans);
    if (merged.mismatch) break;
  }
  if (merged.mismatch) {
    const auto& [row, mm] = *merged.mismatch;
    static constexpr const char* kNames[] = {"A^2 diagonal (t)", "A^2 on an arc (lambda)", "A^2 off the arcs (mu)"};
    verdict.violation = Violation{kNames[static_cast<std::size_t>(mm.slot)], static_cast<std::int64_t>(row),
                                  mm.position, -1, mm.expected, mm.found};
    return verdict;
  }
  verdict.lambda_determined = merged.value[1].has_value();
  verdict.mu_determined = merged.value[2].has_value();
  verdict.params = DsrgParams{static_cast<std::int64_t>(v), k, merged.value[1].value_or(0),
                              merged.value[2].value_or(0), merged.value[0].value_or(0)};
  return verdict;
}

Digraph complement_digraph(const Digraph& graph) {
  const std::size_t v = graph.vertex_count();
  Digraph out(v, v);
  for (std::size_t u = 0; u < v; ++u) {
    for (std::size_t w = 0; w < v; ++w) {
      if (u != w && !graph.has_arc(u, w)) out.add_arc(u, w);
    }
  }
  return out;
}

}  // namespace dsrg
