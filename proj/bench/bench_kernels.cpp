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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "dsrg/digraph.hpp"
#include "dsrg/psf.hpp"
#include "dsrg/semidirect.hpp"

namespace {

using dsrg::Backend;

dsrg::PsfFamily family(std::uint32_t p, std::uint32_t w, std::uint32_t z1, std::uint32_t z2) {
  dsrg::PsfConfig c;
  c.w = w;
  c.z1 = z1;
  c.z2 = z2;
  return dsrg::build_psf(dsrg::ChainRing::make(p, 1, 1), c);
}

Backend backend_of(const benchmark::State& state) { return state.range(0) == 0 ? Backend::serial : Backend::parallel; }

// Difference digraphs on 98, 507 and 2028 vertices.
const dsrg::Digraph& digraph(std::int64_t which) {
  static const dsrg::Digraph small = dsrg::difference_digraph(family(7, 2, 1, 2));
  static const dsrg::Digraph medium = dsrg::difference_digraph(family(13, 2, 2, 2));
  static const dsrg::Digraph large = dsrg::difference_digraph(family(13, 2, 11, 2));
  return which == 0 ? small : which == 1 ? medium : large;
}

void BM_ScanSquareRows(benchmark::State& state) {
  const auto& g = digraph(state.range(1));
  const auto backend = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(dsrg::scan_square_rows(g.adjacency(), backend));
  state.counters["v"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_ScanSquareRows)->ArgsProduct({{0, 1}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_VerifyPsf(benchmark::State& state) {
  static const auto fam = family(7, 3, 4, 3);
  const auto backend = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(dsrg::verify_psf(fam, backend));
}
BENCHMARK(BM_VerifyPsf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GroupRingSquare(benchmark::State& state) {
  static const auto group = dsrg::SemidirectGroup::make(109, 6);
  static const std::vector<std::uint32_t> classes = {3};
  static const auto w = dsrg::connection_set_from_classes(group, classes);
  const auto backend = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(dsrg::groupring_square_check(group, w, backend));
}
BENCHMARK(BM_GroupRingSquare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
