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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcomb/qcomb.hpp"

namespace {

using namespace qcomb;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t n_failures = 0;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (++n_failures > 8) return;
    if (!detail.empty()) detail += " / ";
    detail += n_failures == 8 ? "..." : why;
  }
};

Outcome rowcol_example() {
  Outcome out;
  const BitMatrix p = testing::rowcol_example_matrix();
  const Topology k4 = Topology::complete(4);
  const auto start = Clock::now();
  const auto ops = rowcol_operations(p, k4, std::vector<Vertex>{0, 1, 2, 3});
  const Circuit c = circuit_from_operations(4, ops);
  const double elapsed = seconds_since(start);

  std::multiset<std::pair<std::size_t, std::size_t>> got;
  for (const auto& op : ops) got.insert({op.src, op.dst});
  const std::multiset<std::pair<std::size_t, std::size_t>> want{{0, 1}, {3, 0}, {2, 1}, {3, 1}, {3, 2}};
  if (ops.size() != 5) out.fail(std::to_string(ops.size()) + " operations instead of 5");
  if (got != want) out.fail("operation multiset differs");
  if (parity_matrix(c) != p) out.fail("replayed circuit does not reproduce the matrix");
  if (elapsed >= 1e-3) out.fail("took " + std::to_string(elapsed * 1e3) + " ms");
  if (out.pass) out.detail = std::to_string(ops.size()) + " CNOTs in " + std::to_string(elapsed * 1e6) + " us";
  return out;
}

Outcome comb_round_trip() {
  Outcome out;
  const Circuit c = testing::comb_example_circuit();
  const Decomposition d = decompose(c);
  if (d.comb.holes != testing::comb_example_holes()) out.fail("hole set differs");
  const PluggingMap want{
      {{1, 4}, {"V", {}, 0}}, {{2, 6}, {"U", {}, 0}}, {{6, 7}, {"W", {}, 0}}, {{4, 5}, {"H", {}, 0}}};
  if (d.plugging != want) out.fail("plugging map differs");
  if (parity_matrix(d.comb.circuit) != testing::comb_example_matrix()) out.fail("comb parity matrix differs");
  const auto back = try_compose(d.comb, d.plugging);
  if (!back || *back != c) out.fail("compose does not give back the circuit");
  if (out.pass) out.detail = "4 holes, 8 temporal qubits";
  return out;
}

Outcome combsynth_example() {
  Outcome out;
  const Circuit c = testing::comb_example_circuit();
  const Topology k4 = Topology::complete(4);
  const auto start = Clock::now();
  const Decomposition d = decompose(c);
  CombSynthTrace trace;
  const Comb routed_comb = combsynth(d.comb, k4, &trace);
  const Circuit routed = compose(routed_comb, d.plugging);
  const double elapsed = seconds_since(start);

  std::vector<Qubit> order;
  std::size_t n_ops = 0;
  for (const auto& step : trace.steps) {
    order.push_back(step.extracted);
    n_ops += step.ops.size();
  }
  const std::vector<Qubit> want{5, 7, 6, 3, 4, 0, 1};
  if (order.size() != 8 || !std::equal(want.begin(), want.end(), order.begin())) {
    out.fail("extraction order differs");
  }
  if (n_ops != 12) out.fail(std::to_string(n_ops) + " row operations instead of 12");
  if (routed.size() + 1 != c.size()) {
    out.fail("routed circuit has " + std::to_string(routed.size()) + " gates, original " + std::to_string(c.size()));
  }
  if (elapsed >= 10e-3) out.fail("took " + std::to_string(elapsed * 1e3) + " ms");
  if (out.pass) {
    out.detail = "12 row operations, " + std::to_string(routed.size()) + " gates, " +
                 std::to_string(elapsed * 1e3) + " ms";
  }
  return out;
}

Outcome property_suite() {
  Outcome out;
  std::vector<Topology> topologies;
  for (const auto& name : builtin_topology_names()) topologies.push_back(builtin_topology(name));
  std::mt19937_64 rng(4);
  const double proportions[] = {0.05, 0.15, 0.25, 0.5};
  const auto start = Clock::now();
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Topology& g = topologies[static_cast<std::size_t>(i) % topologies.size()];
    const std::size_t n_cnots = 1 + rng() % 256;
    const double proportion = proportions[rng() % 4];
    const Circuit c = random_circuit(g.n_vertices(), n_cnots, proportion, rng());
    try {
      const Comb comb = decompose(c).comb;
      const Comb routed = combsynth(comb, g);
      std::string why;
      if (parity_matrix(routed.circuit) != parity_matrix(comb.circuit)) why = "parity matrix changed";
      else if (routed.holes != comb.holes) why = "hole set changed";
      else if (!validate(routed)) why = "output comb invalid";
      else if (!testing::edges_respected(routed.circuit, g, logical_owners(routed))) why = "edge violation";
      if (!why.empty()) {
        ++failures;
        out.fail(why + " on instance " + std::to_string(i) + " (" + g.name() + ")");
      }
    } catch (const std::exception& e) {
      ++failures;
      out.fail(std::string("exception on instance ") + std::to_string(i) + ": " + e.what());
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = "1000 instances, 0 failures, " + std::to_string(elapsed) + " s";
  else out.detail = std::to_string(failures) + " failures: " + out.detail;
  return out;
}

Outcome unitary_oracle() {
  Outcome out;
  std::mt19937_64 rng(5);
  std::vector<Topology> small;
  const Topology grid = builtin_topology("9q-square");
  const Topology qx5 = builtin_topology("ibm-qx5");
  small.push_back(grid.induced(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7}));
  small.push_back(grid.induced(std::vector<Vertex>{0, 1, 3, 4}));
  small.push_back(qx5.induced(std::vector<Vertex>{0, 1, 2, 3, 13, 14, 15}));
  small.push_back(Topology::line(6));
  small.push_back(Topology::complete(5));
  const auto start = Clock::now();
  double worst = 1.0;
  for (int i = 0; i < 200; ++i) {
    const Topology& g = small[static_cast<std::size_t>(i) % small.size()];
    const Circuit c = random_circuit(g.n_vertices(), 1 + rng() % 64, 0.05 + 0.15 * static_cast<double>(rng() % 4), rng());
    try {
      const Circuit comb_out = route_circuit(c, g);
      const Circuit slice_out = slice_route(c, g);
      const GateBindings bindings = random_bindings(c, comb_out, rng);
      const Unitary u = simulate_unitary(c, bindings);
      const double a = trace_overlap(u, simulate_unitary(comb_out, bindings));
      const double b = trace_overlap(u, simulate_unitary(slice_out, bindings));
      worst = std::min({worst, a, b});
      if (a < 1.0 - 1e-9) out.fail("comb route mismatch on instance " + std::to_string(i));
      if (b < 1.0 - 1e-9) out.fail("slice route mismatch on instance " + std::to_string(i));
    } catch (const std::exception& e) {
      out.fail(std::string("exception on instance ") + std::to_string(i) + ": " + e.what());
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "200 instances, worst overlap 1 - %.2e, %.1f s", 1.0 - worst, elapsed);
    out.detail = buf;
  }
  return out;
}

Outcome benchmark_trend() {
  Outcome out;
  ExperimentConfig cfg;
  const auto start = Clock::now();
  std::size_t last_report = 0;
  const auto records = run_experiment(cfg, [&](std::size_t done, std::size_t total) {
    if (done * 10 / total != last_report) {
      last_report = done * 10 / total;
      std::fprintf(stderr, "  benchmark grid: %zu/%zu circuits, %.0f s\n", done, total, seconds_since(start));
    }
  });
  const double elapsed = seconds_since(start);
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.ok() ? 0 : 1;
  if (failed != 0) out.fail(std::to_string(failed) + " failed records");

  std::map<std::tuple<std::string, double, std::size_t, Method>, double> mean;
  for (const auto& s : summarize(records)) {
    mean[{s.architecture, s.proportion, s.n_cnots_in, s.method}] = s.mean_overhead_percent;
  }
  const std::size_t top = cfg.cnot_counts.back();
  const std::size_t prev = cfg.cnot_counts[cfg.cnot_counts.size() - 2];
  std::printf("  %-18s %6s %10s %10s %10s %10s\n", "architecture", "prop", "comb", "slice", "d_comb", "d_slice");
  for (const auto& arch : cfg.architectures) {
    for (double p : cfg.proportions) {
      const double comb = mean[{arch, p, top, Method::Comb}];
      const double slice = mean[{arch, p, top, Method::Slice}];
      const double comb_prev = mean[{arch, p, prev, Method::Comb}];
      const double slice_prev = mean[{arch, p, prev, Method::Slice}];
      const double d_comb = std::abs(comb - comb_prev) / std::abs(comb_prev);
      const double d_slice = std::abs(slice - slice_prev) / std::abs(slice_prev);
      std::printf("  %-18s %6.2f %9.2f%% %9.2f%% %9.1f%% %9.1f%%\n", arch.c_str(), p, comb, slice, 100 * d_comb,
                  100 * d_slice);
      const std::string cell = arch + " " + format_number(p);
      if (!(comb < slice)) out.fail("comb not below slice in " + cell);
      if (!(d_comb < 0.2)) out.fail("comb curve not flat in " + cell);
      if (!(d_slice < 0.2)) out.fail("slice curve not flat in " + cell);
    }
  }
  const double comb_9q = mean[{"9q-square", 0.05, top, Method::Comb}];
  const double slice_9q = mean[{"9q-square", 0.05, top, Method::Slice}];
  const auto within_half = [](double got, double want) { return std::abs(got - want) <= 0.5 * std::abs(want); };
  if (!within_half(comb_9q, -43.1)) out.fail("9q-square 5% comb overhead " + std::to_string(comb_9q) + "%");
  if (!within_half(slice_9q, 80.79)) out.fail("9q-square 5% slice overhead " + std::to_string(slice_9q) + "%");
  if (elapsed >= 7200) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = std::to_string(records.size()) + " records, " + std::to_string(elapsed) + " s";
  return out;
}

std::vector<Topology> small_graphs() {
  std::vector<Topology> graphs{Topology::line(2),     Topology::line(7),          Topology::complete(5),
                               Topology::grid(3, 3), Topology::grid(2, 5),       Topology("star", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}),
                               Topology("cycle", 8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}})};
  graphs.push_back(builtin_topology("9q-square"));
  graphs.push_back(builtin_topology("ibm-qx5").induced(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 10, 11, 12, 13}));
  graphs.push_back(builtin_topology("rigetti-16q-aspen").induced(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 13, 14}));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 3 + rng() % 8;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);
    for (std::size_t extra = rng() % (n + 1); extra > 0; --extra) {
      const Vertex a = rng() % n;
      const Vertex b = rng() % n;
      if (a == b) continue;
      if (std::find(edges.begin(), edges.end(), std::pair{a, b}) != edges.end()) continue;
      if (std::find(edges.begin(), edges.end(), std::pair{b, a}) != edges.end()) continue;
      edges.emplace_back(a, b);
    }
    graphs.emplace_back("random-" + std::to_string(k), n, edges);
  }
  return graphs;
}

Outcome graph_oracles() {
  Outcome out;
  std::mt19937_64 rng(8);
  std::size_t n_trees = 0;
  std::size_t n_masks = 0;
  for (const Topology& g : small_graphs()) {
    const std::size_t n = g.n_vertices();
    for (std::uint32_t bits = 1; bits < (1U << n); ++bits) {
      VertexMask active(n);
      for (Vertex v = 0; v < n; ++v) active[v] = ((bits >> v) & 1U) != 0;
      if (!testing::connected_by_relaxation(g, active)) continue;
      ++n_masks;
      if (non_cutting_vertices(g, active) != testing::brute_force_non_cutting(g, active)) {
        out.fail("non-cutting vertices differ on " + g.name());
      }
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v) {
        if (active[v]) members.push_back(v);
      }
      if (members.size() < 2) continue;
      // Every terminal set of size <= 4 on the full graph; a sample on masks.
      std::vector<std::vector<Vertex>> terminal_sets;
      const bool full = bits == (1U << n) - 1;
      for (std::size_t k = 2; k <= std::min<std::size_t>(4, members.size()); ++k) {
        if (full) {
          std::vector<bool> pick(members.size(), false);
          std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
          do {
            std::vector<Vertex> t;
            for (std::size_t i = 0; i < members.size(); ++i) {
              if (pick[i]) t.push_back(members[i]);
            }
            terminal_sets.push_back(t);
          } while (std::prev_permutation(pick.begin(), pick.end()));
        } else {
          std::vector<Vertex> t = members;
          std::shuffle(t.begin(), t.end(), rng);
          t.resize(k);
          terminal_sets.push_back(t);
        }
      }
      for (const auto& t : terminal_sets) {
        ++n_trees;
        const SteinerTree tree = steiner_tree(g, active, t);
        const std::size_t best = testing::brute_force_steiner_edges(g, active, t);
        if (tree.edges.size() != best) {
          out.fail("steiner tree on " + g.name() + " has " + std::to_string(tree.edges.size()) + " edges, optimum " +
                   std::to_string(best));
        }
        const auto vs = tree.vertices();
        for (Vertex v : t) {
          if (std::find(vs.begin(), vs.end(), v) == vs.end()) out.fail("steiner tree misses a terminal");
        }
        for (const auto& [a, b] : tree.edges) {
          if (!g.has_edge(a, b) || !active[a] || !active[b]) out.fail("steiner tree uses an invalid edge");
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(n_masks) + " active masks, " + std::to_string(n_trees) + " Steiner trees";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rowcol worked example", rowcol_example},
      {"comb round trip", comb_round_trip},
      {"combsynth worked example", combsynth_example},
      {"property suite", property_suite},
      {"unitary equivalence", unitary_oracle},
      {"benchmark trend", benchmark_trend},
      {"steiner and articulation oracles", graph_oracles},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::strtoul(argv[i], nullptr, 10));

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.contains(i + 1)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
