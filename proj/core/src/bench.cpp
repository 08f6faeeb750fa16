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

#include "qcomb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "qcomb/combsynth.hpp"
#include "qcomb/simulator.hpp"
#include "qcomb/slicer.hpp"

namespace qcomb {

namespace {

constexpr std::size_t kSpotCheckQubits = 8;
constexpr std::size_t kSpotCheckCnots = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::vector<std::string>> single_qubit_lines(const Circuit& c) {
  std::vector<std::vector<std::string>> lines(c.n_qubits());
  for (const auto& g : c.gates()) {
    if (const auto* sq = std::get_if<SingleQubitGate>(&g)) lines[sq->qubit].push_back(sq->label);
  }
  return lines;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

struct Job {
  std::size_t arch = 0;
  std::size_t count = 0;
  std::size_t prop = 0;
  std::size_t index = 0;
};

ExperimentRecord route_one(const Circuit& input, const Topology& g, Method method, ExperimentRecord record) {
  record.method = method;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Circuit routed = method == Method::Comb ? route_circuit(input, g) : slice_route(input, g);
    record.wall_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    record.error = check_routed(input, routed, g, record.seed);
    record.n_cnots_out = routed.cnot_count();
    record.overhead_percent = overhead_percent(record.n_cnots_in, record.n_cnots_out);
  } catch (const std::exception& e) {
    record.wall_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    record.error = e.what();
  }
  return record;
}

}  // namespace

Circuit random_circuit(std::size_t n_qubits, std::size_t n_cnots, double proportion, std::uint64_t seed) {
  if (n_qubits < 2) throw std::invalid_argument("random_circuit: need at least two qubits");
  if (!(proportion >= 0.0 && proportion <= 1.0)) {
    throw std::invalid_argument("random_circuit: proportion must lie in [0, 1]");
  }
  const auto n_single = static_cast<std::size_t>(std::floor(proportion * static_cast<double>(n_cnots)));
  std::mt19937_64 rng(seed);
  std::vector<bool> is_single(n_cnots + n_single, false);
  std::fill(is_single.begin() + static_cast<std::ptrdiff_t>(n_cnots), is_single.end(), true);
  std::shuffle(is_single.begin(), is_single.end(), rng);

  std::uniform_int_distribution<std::size_t> any_qubit(0, n_qubits - 1);
  std::uniform_int_distribution<std::size_t> other_qubit(0, n_qubits - 2);
  Circuit c(n_qubits);
  std::size_t label = 0;
  for (bool single : is_single) {
    if (single) {
      c.gate("u" + std::to_string(label++), any_qubit(rng));
      continue;
    }
    const std::size_t control = any_qubit(rng);
    std::size_t target = other_qubit(rng);
    if (target >= control) ++target;
    c.cx(control, target);
  }
  return c;
}

void ExperimentConfig::check() const {
  if (architectures.empty() || cnot_counts.empty() || proportions.empty()) {
    throw std::invalid_argument("experiment config: every grid axis needs at least one value");
  }
  if (circuits_per_point == 0) throw std::invalid_argument("experiment config: circuits_per_point must be positive");
  for (auto n : cnot_counts) {
    if (n == 0) throw std::invalid_argument("experiment config: CNOT counts must be positive");
  }
  for (double p : proportions) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("experiment config: proportions must lie in (0, 1]");
  }
}

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  ExperimentConfig cfg;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (!doc.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
    if (doc.contains("architectures")) cfg.architectures = doc["architectures"].get<std::vector<std::string>>();
    if (doc.contains("cnot_counts")) cfg.cnot_counts = doc["cnot_counts"].get<std::vector<std::size_t>>();
    if (doc.contains("proportions")) cfg.proportions = doc["proportions"].get<std::vector<double>>();
    if (doc.contains("circuits_per_point")) cfg.circuits_per_point = doc["circuits_per_point"].get<std::size_t>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("threads")) cfg.threads = doc["threads"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed experiment config: ") + e.what());
  }
  cfg.check();
  return cfg;
}

std::string_view method_name(Method m) { return m == Method::Comb ? "comb" : "slice"; }

double overhead_percent(std::size_t n_in, std::size_t n_out) {
  if (n_in == 0) return n_out == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return 100.0 * (static_cast<double>(n_out) - static_cast<double>(n_in)) / static_cast<double>(n_in);
}

std::string check_routed(const Circuit& input, const Circuit& routed, const Topology& g, std::uint64_t seed) {
  if (routed.n_qubits() != input.n_qubits()) return "routed circuit has a different qubit count";
  for (const auto& gate : routed.gates()) {
    const auto* cx = std::get_if<Cnot>(&gate);
    if (cx != nullptr && !g.has_edge(cx->control, cx->target)) {
      return "CNOT(" + std::to_string(cx->control) + "," + std::to_string(cx->target) + ") is not on an edge";
    }
  }
  if (single_qubit_lines(input) != single_qubit_lines(routed)) return "single-qubit gates were reordered";
  if (input.n_qubits() <= kSpotCheckQubits && input.cnot_count() <= kSpotCheckCnots) {
    std::mt19937_64 rng(seed);
    const GateBindings bindings = random_bindings(input, routed, rng);
    if (!equivalent_up_to_phase(input, routed, bindings)) return "routed circuit is not equivalent to the input";
  }
  return {};
}

std::uint64_t circuit_seed(std::uint64_t base, std::string_view architecture, std::size_t n_cnots,
                           double proportion, std::size_t index) {
  std::uint64_t h = splitmix64(base);
  for (char c : architecture) h = splitmix64(h ^ static_cast<unsigned char>(c));
  h = splitmix64(h ^ n_cnots);
  h = splitmix64(h ^ static_cast<std::uint64_t>(std::llround(proportion * 1e6)));
  return splitmix64(h ^ index);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg,
                                             const std::function<void(std::size_t, std::size_t)>& progress) {
  cfg.check();
  std::vector<Topology> topologies;
  for (const auto& name : cfg.architectures) topologies.push_back(builtin_topology(name));

  std::vector<Job> jobs;
  for (std::size_t a = 0; a < cfg.architectures.size(); ++a) {
    for (std::size_t c = 0; c < cfg.cnot_counts.size(); ++c) {
      for (std::size_t p = 0; p < cfg.proportions.size(); ++p) {
        for (std::size_t i = 0; i < cfg.circuits_per_point; ++i) jobs.push_back({a, c, p, i});
      }
    }
  }

  std::vector<ExperimentRecord> records(2 * jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{0};
  std::mutex progress_mutex;
  const auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const Job& job = jobs[j];
      const Topology& g = topologies[job.arch];
      ExperimentRecord base;
      base.architecture = cfg.architectures[job.arch];
      base.n_cnots_in = cfg.cnot_counts[job.count];
      base.proportion = cfg.proportions[job.prop];
      base.seed = circuit_seed(cfg.seed, base.architecture, base.n_cnots_in, base.proportion, job.index);
      try {
        const Circuit input = random_circuit(g.n_vertices(), base.n_cnots_in, base.proportion, base.seed);
        records[2 * j] = route_one(input, g, Method::Comb, base);
        records[2 * j + 1] = route_one(input, g, Method::Slice, base);
      } catch (const std::exception& e) {
        base.error = e.what();
        records[2 * j] = base;
        records[2 * j].method = Method::Comb;
        records[2 * j + 1] = base;
        records[2 * j + 1].method = Method::Slice;
      }
      const std::size_t done = ++finished;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(done, jobs.size());
      }
    }
  };

  std::size_t n_threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, std::max<std::size_t>(jobs.size(), 1));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  return records;
}

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records) {
  std::vector<CellSummary> out;
  std::map<std::tuple<std::string, double, std::size_t, Method>, std::size_t> index;
  std::vector<double> sums;
  for (const auto& r : records) {
    const auto key = std::make_tuple(r.architecture, r.proportion, r.n_cnots_in, r.method);
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) {
      out.push_back(CellSummary{r.architecture, r.proportion, r.n_cnots_in, r.method, 0.0, 0, 0});
      sums.push_back(0.0);
    }
    auto& cell = out[it->second];
    if (r.ok()) {
      ++cell.n_ok;
      sums[it->second] += r.overhead_percent;
    } else {
      ++cell.n_failed;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].n_ok > 0) out[i].mean_overhead_percent = sums[i] / static_cast<double>(out[i].n_ok);
  }
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string write_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "architecture,n_cnots_in,proportion,seed,method,n_cnots_out,overhead_percent,wall_millis\n";
  for (const auto& r : records) {
    out += r.architecture + ',' + std::to_string(r.n_cnots_in) + ',' + format_number(r.proportion) + ',' +
           std::to_string(r.seed) + ',' + std::string(method_name(r.method)) + ',';
    if (r.ok()) {
      out += std::to_string(r.n_cnots_out) + ',' + fixed(r.overhead_percent, 4);
    } else {
      out += "error,error";
    }
    out += ',' + fixed(r.wall_millis, 3) + '\n';
  }
  return out;
}

std::string plot_file_name(std::string_view architecture, double proportion) {
  return std::string(architecture) + "-" + format_number(proportion) + ".svg";
}

std::string render_svg(const std::vector<CellSummary>& summary, std::string_view architecture, double proportion) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 400;
  constexpr double kLeft = 70;
  constexpr double kRight = 130;
  constexpr double kTop = 40;
  constexpr double kBottom = 50;

  std::map<Method, std::vector<std::pair<double, double>>> series;
  for (const auto& cell : summary) {
    if (cell.architecture != architecture || cell.proportion != proportion || cell.n_ok == 0) continue;
    series[cell.method].push_back({static_cast<double>(cell.n_cnots_in), cell.mean_overhead_percent});
  }
  double xmin = 1;
  double xmax = 2;
  double ymin = 0;
  double ymax = 100;
  bool first = true;
  for (const auto& [method, points] : series) {
    for (const auto& [x, y] : points) {
      if (first) {
        xmin = xmax = x;
        ymin = std::min(0.0, y);
        ymax = std::max(0.0, y);
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax <= xmin) xmax = xmin * 2;
  if (ymax <= ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + plot_w * (std::log2(x) - std::log2(xmin)) / (std::log2(xmax) - std::log2(xmin)); };
  const auto py = [&](double y) { return kTop + plot_h * (ymax - y) / (ymax - ymin); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) + "\" height=\"" +
                    fixed(kHeight, 0) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fixed(kLeft, 0) + "\" y=\"24\" font-size=\"14\">" + std::string(architecture) + ", " +
         format_number(100 * proportion) + "% single-qubit gates</text>\n";
  svg += "<rect x=\"" + fixed(kLeft, 1) + "\" y=\"" + fixed(kTop, 1) + "\" width=\"" + fixed(plot_w, 1) +
         "\" height=\"" + fixed(plot_h, 1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ymin < 0 && ymax > 0) {
    svg += "<line x1=\"" + fixed(kLeft, 1) + "\" y1=\"" + fixed(py(0), 1) + "\" x2=\"" + fixed(kLeft + plot_w, 1) +
           "\" y2=\"" + fixed(py(0), 1) + "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (double x = xmin; x <= xmax * 1.0001; x *= 2) {
    svg += "<text x=\"" + fixed(px(x), 1) + "\" y=\"" + fixed(kTop + plot_h + 18, 1) +
           "\" text-anchor=\"middle\">" + format_number(x) + "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double y = ymin + (ymax - ymin) * k / 4;
    svg += "<text x=\"" + fixed(kLeft - 6, 1) + "\" y=\"" + fixed(py(y) + 4, 1) + "\" text-anchor=\"end\">" +
           fixed(y, 0) + "</text>\n";
  }
  svg += "<text x=\"" + fixed(kLeft + plot_w / 2, 1) + "\" y=\"" + fixed(kHeight - 10, 1) +
         "\" text-anchor=\"middle\">input CNOT count</text>\n";
  svg += "<text transform=\"translate(16 " + fixed(kTop + plot_h / 2, 1) +
         ") rotate(-90)\" text-anchor=\"middle\">CNOT overhead (%)</text>\n";

  const std::map<Method, std::string> colour{{Method::Comb, "#1f77b4"}, {Method::Slice, "#d62728"}};
  double legend_y = kTop + 10;
  for (const auto& [method, points] : series) {
    std::string pts;
    for (const auto& [x, y] : points) pts += fixed(px(x), 1) + "," + fixed(py(y), 1) + " ";
    svg += "<polyline fill=\"none\" stroke=\"" + colour.at(method) + "\" stroke-width=\"2\" points=\"" + pts +
           "\"/>\n";
    for (const auto& [x, y] : points) {
      svg += "<circle cx=\"" + fixed(px(x), 1) + "\" cy=\"" + fixed(py(y), 1) + "\" r=\"3\" fill=\"" +
             colour.at(method) + "\"/>\n";
    }
    svg += "<line x1=\"" + fixed(kWidth - kRight + 15, 1) + "\" y1=\"" + fixed(legend_y, 1) + "\" x2=\"" +
           fixed(kWidth - kRight + 40, 1) + "\" y2=\"" + fixed(legend_y, 1) + "\" stroke=\"" + colour.at(method) +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fixed(kWidth - kRight + 46, 1) + "\" y=\"" + fixed(legend_y + 4, 1) + "\">" +
           std::string(method_name(method)) + "</text>\n";
    legend_y += 20;
  }
  svg += "</svg>\n";
  return svg;
}

std::vector<std::filesystem::path> write_experiment_outputs(const std::vector<ExperimentRecord>& records,
                                                            const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  const auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    written.push_back(path);
  };
  write(dir / "results.csv", write_csv(records));

  const auto summary = summarize(records);
  std::vector<std::pair<std::string, double>> cells;
  for (const auto& cell : summary) {
    const std::pair<std::string, double> key{cell.architecture, cell.proportion};
    if (std::find(cells.begin(), cells.end(), key) == cells.end()) cells.push_back(key);
  }
  for (const auto& [arch, prop] : cells) write(dir / plot_file_name(arch, prop), render_svg(summary, arch, prop));
  return written;
}

}  // namespace qcomb
