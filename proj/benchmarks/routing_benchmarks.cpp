// Copyright 2026 The qcomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qcomb/qcomb.hpp"

namespace {

using namespace qcomb;

BitMatrix random_parity(std::size_t n, std::size_t n_cnots, std::uint64_t seed) {
  return parity_matrix(random_circuit(n, n_cnots, 0.0, seed));
}

void BM_Rowcol(benchmark::State& state) {
  const Topology g = builtin_topology("ibm-q20-tokyo");
  const BitMatrix p = random_parity(g.n_vertices(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rowcol(p, g));
}
BENCHMARK(BM_Rowcol)->Arg(64)->Arg(1024);

void BM_RouteCircuit(benchmark::State& state) {
  const Topology g = builtin_topology("ibm-qx5");
  const Circuit c = random_circuit(g.n_vertices(), static_cast<std::size_t>(state.range(0)),
                                   static_cast<double>(state.range(1)) / 100.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(route_circuit(c, g));
}
BENCHMARK(BM_RouteCircuit)->Args({64, 5})->Args({256, 25})->Args({1024, 5})->Args({1024, 50})->Unit(benchmark::kMillisecond);

void BM_SliceRoute(benchmark::State& state) {
  const Topology g = builtin_topology("ibm-qx5");
  const Circuit c = random_circuit(g.n_vertices(), static_cast<std::size_t>(state.range(0)), 0.25, 3);
  for (auto _ : state) benchmark::DoNotOptimize(slice_route(c, g));
}
BENCHMARK(BM_SliceRoute)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_SteinerTree(benchmark::State& state) {
  const Topology g = builtin_topology("ibm-q20-tokyo");
  const VertexMask active = full_mask(g);
  std::mt19937_64 rng(4);
  std::vector<Vertex> terminals(g.n_vertices());
  for (Vertex v = 0; v < g.n_vertices(); ++v) terminals[v] = v;
  std::shuffle(terminals.begin(), terminals.end(), rng);
  terminals.resize(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(steiner_tree(g, active, terminals));
}
BENCHMARK(BM_SteinerTree)->Arg(3)->Arg(4)->Arg(10);

void BM_SimulateUnitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(n, 64, 0.25, 5);
  std::mt19937_64 rng(6);
  const GateBindings bindings = random_bindings(c, c, rng);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_unitary(c, bindings));
}
BENCHMARK(BM_SimulateUnitary)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
