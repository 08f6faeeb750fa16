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

#include "qcomb/comb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <queue>
#include <stdexcept>

#include "qcomb/errors.hpp"
#include "qcomb/qasm.hpp"

namespace qcomb {

namespace {

constexpr Qubit kNone = static_cast<Qubit>(-1);

// Each qubit opens at most one hole and closes at most one, no hole is
// (q, q), and every endpoint is in range.
bool holes_well_formed(const Comb& comb) {
  const std::size_t n = comb.circuit.n_qubits();
  std::vector<bool> opens(n, false);
  std::vector<bool> closes(n, false);
  for (const auto& h : comb.holes) {
    if (h.first >= n || h.second >= n || h.first == h.second) return false;
    if (opens[h.first] || closes[h.second]) return false;
    opens[h.first] = true;
    closes[h.second] = true;
  }
  return true;
}

// Kahn's algorithm releasing the smallest ready node first. Returns fewer
// than n nodes when the graph has a cycle.
std::vector<std::size_t> stable_topological_order(const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& out : succ) {
    for (std::size_t w : out) ++indegree[w];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

void rename(Gate& g, Qubit from, Qubit to) {
  if (auto* cx = std::get_if<Cnot>(&g)) {
    if (cx->control == from) cx->control = to;
    if (cx->target == from) cx->target = to;
  } else {
    auto& sq = std::get<SingleQubitGate>(g);
    if (sq.qubit == from) sq.qubit = to;
  }
}

[[noreturn]] void hole_syntax_error(std::string_view what, std::size_t line, std::size_t column) {
  throw ParseError(std::string(what), line, column);
}

// Parses "(a,b)" starting at text[pos]; advances pos past the ')'.
Hole parse_hole(std::string_view text, std::size_t& pos, std::size_t line) {
  const auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  const auto number = [&]() -> Qubit {
    skip();
    Qubit value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) hole_syntax_error("expected qubit index", line, pos + 1);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip();
    return value;
  };
  const auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      hole_syntax_error(std::string("expected '") + c + "'", line, pos + 1);
    }
    ++pos;
  };
  expect('(');
  Hole h;
  h.first = number();
  expect(',');
  h.second = number();
  expect(')');
  return h;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Decomposition decompose(const Circuit& c) {
  const std::size_t n = c.n_qubits();
  std::vector<Qubit> current(n);
  for (Qubit q = 0; q < n; ++q) current[q] = q;

  // First pass numbers fresh qubits in cut order; they are renumbered by
  // logical qubit afterwards.
  std::vector<Gate> gates;
  std::vector<Hole> holes;
  std::vector<SingleQubitGate> cut_gates;
  std::vector<Qubit> cut_owner;
  for (const auto& g : c.gates()) {
    if (const auto* cx = std::get_if<Cnot>(&g)) {
      gates.push_back(Cnot{current[cx->control], current[cx->target]});
      continue;
    }
    const auto& sq = std::get<SingleQubitGate>(g);
    const Qubit fresh = n + holes.size();
    holes.push_back({current[sq.qubit], fresh});
    cut_gates.push_back(SingleQubitGate{sq.label, sq.params, 0});
    cut_owner.push_back(sq.qubit);
    current[sq.qubit] = fresh;
  }

  std::vector<Qubit> relabel(n + holes.size());
  for (Qubit q = 0; q < n; ++q) relabel[q] = q;
  Qubit next = n;
  for (Qubit q = 0; q < n; ++q) {
    for (std::size_t k = 0; k < holes.size(); ++k) {
      if (cut_owner[k] == q) relabel[n + k] = next++;
    }
  }

  Decomposition out;
  out.comb.circuit = Circuit(n + holes.size());
  for (const auto& g : gates) {
    const auto& cx = std::get<Cnot>(g);
    out.comb.circuit.cx(relabel[cx.control], relabel[cx.target]);
  }
  for (std::size_t k = 0; k < holes.size(); ++k) {
    const Hole h{relabel[holes[k].first], relabel[holes[k].second]};
    out.comb.holes.push_back(h);
    out.plugging.emplace(h, cut_gates[k]);
  }
  return out;
}

std::optional<Circuit> try_compose(const Comb& comb, const PluggingMap& plugging) {
  for (const auto& h : comb.holes) {
    if (!plugging.contains(h)) {
      throw std::invalid_argument("plugging map has no gate for hole (" + std::to_string(h.first) + "," +
                                  std::to_string(h.second) + ")");
    }
  }
  if (!holes_well_formed(comb)) return std::nullopt;

  const std::size_t n = comb.circuit.n_qubits();
  std::vector<Gate> gates = comb.circuit.gates();
  std::vector<Hole> holes = comb.holes;
  std::vector<bool> merged(n, false);

  for (std::size_t k = 0; k < holes.size(); ++k) {
    const auto [q1, q2] = holes[k];
    if (q1 == q2) return std::nullopt;

    std::vector<std::vector<std::size_t>> succ(gates.size());
    std::vector<std::size_t> last_on(n, kNone);
    std::size_t last_q1 = kNone;
    std::size_t first_q2 = kNone;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      for (Qubit q : gate_qubits(gates[i])) {
        if (last_on[q] != kNone) succ[last_on[q]].push_back(i);
        last_on[q] = i;
        if (q == q1) last_q1 = i;
        if (q == q2 && first_q2 == kNone) first_q2 = i;
      }
    }
    if (last_q1 != kNone && first_q2 != kNone) {
      if (last_q1 == first_q2) return std::nullopt;
      succ[last_q1].push_back(first_q2);
    }
    const std::vector<std::size_t> order = stable_topological_order(succ);
    if (order.size() != gates.size()) return std::nullopt;

    SingleQubitGate plug = plugging.at(comb.holes[k]);
    plug.qubit = q1;
    std::vector<Gate> reordered;
    reordered.reserve(gates.size() + 1);
    bool placed = false;
    for (std::size_t i : order) {
      if (!placed && touches(gates[i], q2)) {
        reordered.push_back(plug);
        placed = true;
      }
      reordered.push_back(std::move(gates[i]));
    }
    if (!placed) reordered.push_back(plug);
    gates = std::move(reordered);

    for (auto& g : gates) {
      rename(g, q2, q1);
      if (const auto* cx = std::get_if<Cnot>(&g); cx != nullptr && cx->control == cx->target) {
        return std::nullopt;
      }
    }
    for (std::size_t j = k + 1; j < holes.size(); ++j) {
      if (holes[j].first == q2) holes[j].first = q1;
      if (holes[j].second == q2) holes[j].second = q1;
      if (holes[j].first == holes[j].second) return std::nullopt;
    }
    merged[q2] = true;
  }

  std::vector<Qubit> relabel(n, kNone);
  Qubit next = 0;
  for (Qubit q = 0; q < n; ++q) {
    if (!merged[q]) relabel[q] = next++;
  }
  Circuit out(next);
  for (auto& g : gates) {
    if (auto* cx = std::get_if<Cnot>(&g)) {
      out.cx(relabel[cx->control], relabel[cx->target]);
    } else {
      auto& sq = std::get<SingleQubitGate>(g);
      sq.qubit = relabel[sq.qubit];
      out.add(std::move(sq));
    }
  }
  return out;
}

Circuit compose(const Comb& comb, const PluggingMap& plugging) {
  auto out = try_compose(comb, plugging);
  if (!out) throw CompositionError("comb cannot be composed: cyclic dependency or collapsed hole");
  return std::move(*out);
}

bool validate(const Comb& comb) {
  if (!holes_well_formed(comb)) return false;
  const std::size_t n = comb.circuit.n_qubits();
  const auto& gates = comb.circuit.gates();
  const std::size_t m = gates.size();

  std::vector<std::size_t> incoming(n, kNone);
  std::vector<std::size_t> outgoing(n, kNone);
  for (std::size_t k = 0; k < comb.holes.size(); ++k) {
    outgoing[comb.holes[k].first] = m + k;
    incoming[comb.holes[k].second] = m + k;
  }

  std::vector<std::vector<std::size_t>> succ(m + comb.holes.size());
  std::vector<std::size_t> last = incoming;
  for (std::size_t i = 0; i < m; ++i) {
    for (Qubit q : gate_qubits(gates[i])) {
      if (last[q] != kNone) succ[last[q]].push_back(i);
      last[q] = i;
    }
  }
  for (Qubit q = 0; q < n; ++q) {
    if (outgoing[q] != kNone && last[q] != kNone) succ[last[q]].push_back(outgoing[q]);
  }
  return stable_topological_order(succ).size() == succ.size();
}

std::vector<std::vector<Qubit>> hole_chains(const Comb& comb) {
  if (!holes_well_formed(comb)) throw std::invalid_argument("comb holes do not form linear chains");
  const std::size_t n = comb.circuit.n_qubits();
  std::vector<Qubit> next(n, kNone);
  std::vector<bool> is_second(n, false);
  for (const auto& h : comb.holes) {
    next[h.first] = h.second;
    is_second[h.second] = true;
  }
  std::vector<std::vector<Qubit>> chains;
  std::size_t covered = 0;
  for (Qubit head = 0; head < n; ++head) {
    if (is_second[head]) continue;
    auto& chain = chains.emplace_back();
    for (Qubit q = head; q != kNone; q = next[q]) chain.push_back(q);
    covered += chain.size();
  }
  if (covered != n) throw std::invalid_argument("comb holes form a cycle");
  return chains;
}

std::vector<Qubit> logical_owners(const Comb& comb) {
  std::vector<Qubit> owner(comb.circuit.n_qubits(), kNone);
  const auto chains = hole_chains(comb);
  for (Qubit l = 0; l < chains.size(); ++l) {
    for (Qubit q : chains[l]) owner[q] = l;
  }
  return owner;
}

Frontier frontier(const Comb& comb, std::size_t n_logical) {
  if (!validate(comb)) throw std::invalid_argument("frontier: comb is not valid");
  const auto chains = hole_chains(comb);
  if (chains.size() != n_logical) {
    throw std::invalid_argument("frontier: comb has " + std::to_string(chains.size()) +
                                " hole chains, expected " + std::to_string(n_logical));
  }
  Frontier out;
  for (const auto& chain : chains) out.t.push_back(chain.back());
  out.available = out.t;
  std::sort(out.available.begin(), out.available.end());
  return out;
}

std::string write_comb(const Comb& comb) {
  std::string out = write_circuit(comb.circuit);
  out += "// holes:";
  for (const auto& h : comb.holes) out += " (" + std::to_string(h.first) + "," + std::to_string(h.second) + ")";
  out += '\n';
  return out;
}

Comb parse_comb(std::string_view text) {
  Comb comb;
  comb.circuit = parse_circuit(text);
  const auto lines = split_lines(text);
  bool found = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t at = line.find("// holes:");
    if (at == std::string_view::npos) continue;
    if (found) throw ParseError("more than one holes line", i + 1, at + 1);
    found = true;
    std::size_t pos = at + std::string_view("// holes:").size();
    for (;;) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const Hole h = parse_hole(line, pos, i + 1);
      if (h.first >= comb.circuit.n_qubits() || h.second >= comb.circuit.n_qubits()) {
        throw ParseError("hole qubit out of range", i + 1, pos);
      }
      comb.holes.push_back(h);
    }
  }
  return comb;
}

std::string write_plugging(const PluggingMap& plugging) {
  std::string out;
  for (const auto& [h, g] : plugging) {
    out += "(" + std::to_string(h.first) + "," + std::to_string(h.second) + ")=" + g.label +
           format_params(g.params) + "\n";
  }
  return out;
}

PluggingMap parse_plugging(std::string_view text) {
  PluggingMap out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (const auto comment = line.find("//"); comment != std::string_view::npos) line = line.substr(0, comment);
    if (trim(line).empty()) continue;
    std::size_t pos = 0;
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const Hole h = parse_hole(line, pos, i + 1);
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size() || line[pos] != '=') hole_syntax_error("expected '='", i + 1, pos + 1);
    SingleQubitGate g;
    try {
      g = parse_gate_spec(line.substr(pos + 1));
    } catch (const ParseError& e) {
      throw ParseError("bad gate after '=': " + std::string(e.what()), i + 1, pos + 2);
    }
    if (!out.emplace(h, std::move(g)).second) hole_syntax_error("hole listed twice", i + 1, 1);
  }
  return out;
}

}  // namespace qcomb
