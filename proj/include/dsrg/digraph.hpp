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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsrg/error.hpp"
#include "dsrg/kernels.hpp"
#include "dsrg/params.hpp"
#include "dsrg/psf.hpp"

namespace dsrg {

/// Largest vertex count for which adjacency matrices are materialized.
inline constexpr std::size_t kDefaultAdjacencyCap = 20000;

/// Loop-free digraph on vertices 0..v-1 with bit-packed adjacency rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t v, std::size_t cap = kDefaultAdjacencyCap);

  std::size_t vertex_count() const noexcept { return adj_.rows(); }
  bool has_arc(std::size_t u, std::size_t w) const noexcept { return adj_.test(u, w); }
  /// Throws InvalidParameter for loops or out-of-range vertices.
  void add_arc(std::size_t u, std::size_t w);
  void remove_arc(std::size_t u, std::size_t w);

  std::size_t out_degree(std::size_t u) const noexcept { return adj_.row_count(u); }
  std::vector<std::size_t> in_degrees() const;
  std::uint64_t arc_count() const noexcept;
  /// Pairs {u, w} with both arcs present.
  std::uint64_t undirected_edge_count() const;
  /// All arcs in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs() const;

  const BitRows& adjacency() const noexcept { return adj_; }

  bool operator==(const Digraph&) const = default;

 private:
  BitRows adj_;
};

/// Vertices are m copies of G in block-major order (i * |G| + g); x in copy i
/// points to y in copy j iff x - y lies in S_{i,j}.
Digraph difference_digraph(const PsfFamily& family, std::size_t cap = kDefaultAdjacencyCap);

/// Exact check of constant in/out degree k and A^2 = tI + lambda A + mu (J - I - A).
Verdict verify_dsrg(const Digraph& graph, Backend backend = Backend::parallel);

/// Off-diagonal bitwise complement.
Digraph complement_digraph(const Digraph& graph);

/// A finite group with elements 0..order()-1.
template <class G>
concept FiniteGroup = requires(const G& g, std::uint32_t a) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::convertible_to<std::uint32_t>;
  { g.multiply(a, a) } -> std::convertible_to<std::uint32_t>;
};

/// Cay(G, S): arc x -> x s for every s in S, i.e. x -> y iff x^{-1} y in S.
template <FiniteGroup G>
Digraph cayley_digraph(const G& group, std::span<const std::uint32_t> connection,
                       std::size_t cap = kDefaultAdjacencyCap) {
  for (auto s : connection) {
    if (s == group.identity()) throw InvalidParameter("connection set contains the identity");
  }
  const std::size_t v = group.order();
  Digraph graph(v, cap);
  for (std::size_t x = 0; x < v; ++x) {
    for (auto s : connection) graph.add_arc(x, group.multiply(static_cast<std::uint32_t>(x), s));
  }
  return graph;
}

}  // namespace dsrg
