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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcomb/circuit.hpp"
#include "qcomb/topology.hpp"

namespace qcomb {

/// `n_cnots` CNOTs on uniformly random ordered pairs of distinct qubits and
/// floor(proportion * n_cnots) opaque gates u0, u1, ... on uniformly random
/// qubits, shuffled into uniformly random positions. Throws
/// std::invalid_argument when n_qubits < 2 or proportion is outside [0, 1].
Circuit random_circuit(std::size_t n_qubits, std::size_t n_cnots, double proportion, std::uint64_t seed);

struct ExperimentConfig {
  std::vector<std::string> architectures{"9q-square", "16q-square", "rigetti-16q-aspen", "ibm-qx5",
                                         "ibm-q20-tokyo"};
  std::vector<std::size_t> cnot_counts{4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::vector<double> proportions{0.05, 0.15, 0.25, 0.5};
  std::size_t circuits_per_point = 20;
  std::uint64_t seed = 2022;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  /// Throws std::invalid_argument on an empty grid axis, a non-positive
  /// count, or a proportion outside (0, 1].
  void check() const;
};

/// Reads a JSON object with any of the ExperimentConfig field names; missing
/// fields keep their defaults.
ExperimentConfig parse_experiment_config(std::string_view json_text);

enum class Method { Comb, Slice };

std::string_view method_name(Method m);

struct ExperimentRecord {
  std::string architecture;
  std::size_t n_cnots_in = 0;
  double proportion = 0;
  std::uint64_t seed = 0;
  Method method = Method::Comb;
  std::size_t n_cnots_out = 0;
  double overhead_percent = 0;
  double wall_millis = 0;
  /// Empty on success; otherwise why routing or verification failed.
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

/// 100 * (out - in) / in; zero when both are zero.
double overhead_percent(std::size_t n_in, std::size_t n_out);

/// Returns an empty string when `routed` only uses CNOTs on edges of `g`,
/// keeps the single-qubit gates in their per-qubit order, and, for up to 8
/// qubits and 64 CNOTs, is unitarily equivalent to `input` under random
/// bindings of the opaque gates; otherwise a description of the first
/// violation.
std::string check_routed(const Circuit& input, const Circuit& routed, const Topology& g, std::uint64_t seed);

/// Seed of one grid point's circuit, mixed from the config seed and the grid
/// coordinates.
std::uint64_t circuit_seed(std::uint64_t base, std::string_view architecture, std::size_t n_cnots,
                           double proportion, std::size_t index);

/// Routes every grid circuit with both methods. Records are ordered by
/// architecture, CNOT count, proportion, circuit index, then method, as the
/// axes appear in the config. Failures are recorded, not thrown.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg,
                                             const std::function<void(std::size_t, std::size_t)>& progress = {});

struct CellSummary {
  std::string architecture;
  double proportion = 0;
  std::size_t n_cnots_in = 0;
  Method method = Method::Comb;
  double mean_overhead_percent = 0;
  std::size_t n_ok = 0;
  std::size_t n_failed = 0;
};

/// Mean overhead per (architecture, proportion, count, method), over the
/// successful records, in record order.
std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records);

/// Columns architecture,n_cnots_in,proportion,seed,method,n_cnots_out,
/// overhead_percent,wall_millis. Failed records carry "error" in the
/// n_cnots_out and overhead_percent columns.
std::string write_csv(const std::vector<ExperimentRecord>& records);

/// Line chart of mean overhead against CNOT count (log scale) for both
/// methods in one architecture/proportion cell.
std::string render_svg(const std::vector<CellSummary>& summary, std::string_view architecture, double proportion);

std::string plot_file_name(std::string_view architecture, double proportion);

/// Writes results.csv and one SVG per architecture/proportion into `dir`,
/// creating it if needed. Returns the paths written.
std::vector<std::filesystem::path> write_experiment_outputs(const std::vector<ExperimentRecord>& records,
                                                            const std::filesystem::path& dir);

/// Shortest decimal text that reads back as the same double.
std::string format_number(double value);

}  // namespace qcomb
