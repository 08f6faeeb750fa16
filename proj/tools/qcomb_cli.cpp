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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qcomb/qcomb.hpp"

namespace {

using namespace qcomb;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

/// Bad input; reported on stderr and mapped to kUsage.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path.string());
}

Circuit read_circuit(const std::filesystem::path& path) {
  try {
    return parse_circuit(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Topology resolve_topology(const std::string& arch) {
  if (std::filesystem::is_regular_file(arch)) return load_topology(read_file(arch));
  return builtin_topology(arch);
}

/// Same gates on a register of `n` qubits.
Circuit widen(const Circuit& c, std::size_t n) {
  Circuit out(n);
  for (const auto& g : c.gates()) out.add(g);
  return out;
}

int run_route(const std::string& in, const std::string& arch, const std::string& method, const std::string& out) {
  const Circuit c = read_circuit(in);
  const Topology g = resolve_topology(arch);
  if (c.n_qubits() > g.n_vertices()) {
    throw InputError("circuit has " + std::to_string(c.n_qubits()) + " qubits but " + g.name() + " only " +
                     std::to_string(g.n_vertices()));
  }
  const Circuit wide = widen(c, g.n_vertices());
  const Circuit routed = method == "comb" ? route_circuit(wide, g) : slice_route(wide, g);
  write_file(out, write_circuit(routed));
  std::cerr << method << ": " << c.cnot_count() << " -> " << routed.cnot_count() << " CNOTs, " << c.size()
            << " -> " << routed.size() << " gates\n";
  return kOk;
}

int run_verify(const std::string& a_path, const std::string& b_path, std::size_t max_qubits) {
  Circuit a = read_circuit(a_path);
  Circuit b = read_circuit(b_path);
  const std::size_t n = std::max(a.n_qubits(), b.n_qubits());
  if (n > max_qubits || n > kMaxSimulatedQubits) {
    throw InputError(std::to_string(n) + " qubits exceeds the simulation limit of " +
                     std::to_string(std::min(max_qubits, kMaxSimulatedQubits)));
  }
  a = widen(a, n);
  b = widen(b, n);
  std::mt19937_64 rng(std::random_device{}());
  for (int trial = 0; trial < 3; ++trial) {
    if (!equivalent_up_to_phase(a, b, random_bindings(a, b, rng))) {
      std::cout << "not equivalent\n";
      return kMismatch;
    }
  }
  std::cout << "equivalent\n";
  return kOk;
}

int run_bench(const std::string& config_path, const std::string& out_dir) {
  ExperimentConfig cfg;
  if (!config_path.empty()) cfg = parse_experiment_config(read_file(config_path));
  const auto records = run_experiment(cfg, [](std::size_t done, std::size_t total) {
    std::fprintf(stderr, "\r%zu/%zu circuits", done, total);
    if (done == total) std::fputc('\n', stderr);
  });
  for (const auto& path : write_experiment_outputs(records, out_dir)) std::cout << path.string() << '\n';
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.ok() ? 0 : 1;
  if (failed != 0) std::cerr << failed << " records failed\n";
  return kOk;
}

int run_topo(bool list, const std::string& show) {
  if (list) {
    for (const auto& name : builtin_topology_names()) {
      const Topology g = builtin_topology(name);
      std::cout << name << ' ' << g.n_vertices() << " qubits, " << g.edges().size() << " edges\n";
    }
  }
  if (!show.empty()) {
    const Topology g = resolve_topology(show);
    std::cout << g.name() << ' ' << g.n_vertices() << '\n';
    for (const auto& [a, b] : g.edges()) std::cout << a << ' ' << b << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing of quantum circuits onto constrained qubit topologies"};
  app.require_subcommand(1);

  std::string in, arch, method = "comb", out;
  auto* route = app.add_subcommand("route", "Route a circuit onto a topology");
  route->add_option("--in", in, "Input OpenQASM circuit")->required();
  route->add_option("--arch", arch, "Builtin topology name or JSON file")->required();
  route->add_option("--method", method, "comb or slice")->check(CLI::IsMember({"comb", "slice"}));
  route->add_option("--out", out, "Output OpenQASM file")->required();

  std::string a_path, b_path;
  std::size_t max_qubits = kMaxSimulatedQubits;
  auto* verify = app.add_subcommand("verify", "Check two circuits for equality up to global phase");
  verify->add_option("--a", a_path, "First circuit")->required();
  verify->add_option("--b", b_path, "Second circuit")->required();
  verify->add_option("--max-qubits", max_qubits, "Largest register to simulate");

  std::string config_path, out_dir;
  auto* bench = app.add_subcommand("bench", "Run the routing benchmark grid");
  bench->add_option("--config", config_path, "JSON experiment config; defaults apply to missing fields");
  bench->add_option("--out-dir", out_dir, "Directory for results.csv and plots")->required();

  bool list = false;
  std::string show;
  auto* topo = app.add_subcommand("topo", "List or print topologies");
  auto* list_flag = topo->add_flag("--list", list, "List builtin topologies");
  auto* show_opt = topo->add_option("--show", show, "Print the edges of a topology");
  list_flag->excludes(show_opt);
  topo->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*route) return run_route(in, arch, method, out);
    if (*verify) return run_verify(a_path, b_path, max_qubits);
    if (*bench) return run_bench(config_path, out_dir);
    return run_topo(list, show);
  } catch (const std::exception& e) {
    std::cerr << "qcomb: " << e.what() << '\n';
    return kUsage;
  }
}
