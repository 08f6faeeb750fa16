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

#include "qcomb/combsynth.hpp"

#include <algorithm>
#include <string>

#include "qcomb/errors.hpp"

namespace qcomb {

namespace {

constexpr Qubit kNone = static_cast<Qubit>(-1);

}  // namespace

ExtractionState::ExtractionState(const Comb& comb, const Topology& g) : g_(g) {
  if (!validate(comb)) throw SynthesisError("input is not a valid comb");
  const auto chains = hole_chains(comb);
  if (chains.size() != g.n_vertices()) {
    throw SynthesisError("comb has " + std::to_string(chains.size()) + " logical qubits but the topology has " +
                         std::to_string(g.n_vertices()) + " vertices");
  }
  const std::size_t n = comb.circuit.n_qubits();
  for (const auto& gate : comb.circuit.gates()) {
    const auto* cx = std::get_if<Cnot>(&gate);
    if (cx == nullptr) throw SynthesisError("comb circuit contains a non-CNOT gate");
    gates_.push_back(*cx);
  }
  p_ = parity_matrix(comb.circuit);
  live_.assign(n, true);
  owner_.assign(n, 0);
  predecessor_.assign(n, kNone);
  successor_.assign(n, kNone);
  for (Vertex v = 0; v < chains.size(); ++v) {
    const auto& chain = chains[v];
    for (std::size_t i = 0; i < chain.size(); ++i) {
      owner_[chain[i]] = v;
      if (i > 0) predecessor_[chain[i]] = chain[i - 1];
      if (i + 1 < chain.size()) successor_[chain[i]] = chain[i + 1];
    }
    t_.push_back(chain.back());
  }
  active_ = full_mask(g);
  remaining_ = n;
  live_gate_end_ = gates_.size();
}

bool ExtractionState::is_available(Qubit q) const {
  if (!live_.at(q)) return false;
  return successor_[q] == kNone || !live_[successor_[q]];
}

BitMatrix ExtractionState::build_submatrix() const {
  BitMatrix sub(n_logical(), n_temporal());
  for (Vertex v = 0; v < n_logical(); ++v) sub.set_row(v, p_.row(t_[v]));
  return sub;
}

bool ExtractionState::is_extractible(Qubit e) const {
  if (!is_available(e)) return false;
  for (Qubit q = 0; q < n_temporal(); ++q) {
    if (live_[q] && !is_available(q) && p_.get(q, e)) return false;
  }
  const Vertex v = owner_[e];
  if (predecessor_[e] == kNone) {
    const auto candidates = non_cutting_vertices(g_, active_);
    if (!std::binary_search(candidates.begin(), candidates.end(), v)) return false;
  }
  std::vector<BitVector> rows;
  for (Vertex w = 0; w < n_logical(); ++w) {
    if (active_[w]) rows.push_back(p_.row(t_[w]));
  }
  return solve_xor_subset(rows, BitVector::unit(n_temporal(), e)).has_value();
}

Qubit ExtractionState::choose_extractible() const {
  std::size_t n_available = 0;
  for (Vertex v = 0; v < n_logical(); ++v) n_available += active_[v] ? 1 : 0;
  std::vector<bool> tried(n_temporal(), false);
  std::size_t n_tried = 0;
  const auto attempt = [&](Qubit q) {
    if (tried[q] || !is_available(q)) return false;
    tried[q] = true;
    ++n_tried;
    return is_extractible(q);
  };
  for (std::size_t i = live_gate_end_; i-- > 0 && n_tried < n_available;) {
    const Cnot& cx = gates_[i];
    if (!live_[cx.control] || !live_[cx.target]) continue;
    if (attempt(cx.control)) return cx.control;
    if (attempt(cx.target)) return cx.target;
  }
  for (Qubit q = n_temporal(); q-- > 0;) {
    if (attempt(q)) return q;
  }
  throw SynthesisError("no extractible temporal qubit");
}

std::vector<RowOp> ExtractionState::extract(Qubit e) {
  if (!is_available(e)) throw SynthesisError("temporal qubit " + std::to_string(e) + " is not available");
  const Vertex v = owner_[e];
  std::vector<std::size_t> vertex_rows(n_logical(), kNoRow);
  for (Vertex w = 0; w < n_logical(); ++w) {
    if (active_[w]) vertex_rows[w] = t_[w];
  }
  std::vector<RowOp> ops = eliminate_column(p_, g_, vertex_rows, v, e);
  for (const auto& op : eliminate_row(p_, g_, vertex_rows, v, e)) ops.push_back(op);

  live_[e] = false;
  --remaining_;
  if (predecessor_[e] != kNone) {
    t_[v] = predecessor_[e];
  } else {
    active_[v] = false;
  }
  while (live_gate_end_ > 0) {
    const Cnot& cx = gates_[live_gate_end_ - 1];
    if (live_[cx.control] && live_[cx.target]) break;
    --live_gate_end_;
  }
  return ops;
}

Comb combsynth(const Comb& comb, const Topology& g, CombSynthTrace* trace) {
  ExtractionState state(comb, g);
  std::vector<RowOp> ops;
  while (!state.done()) {
    const Qubit e = state.choose_extractible();
    std::vector<RowOp> step = state.extract(e);
    ops.insert(ops.end(), step.begin(), step.end());
    if (trace != nullptr) trace->steps.push_back({e, std::move(step)});
  }
  return Comb{circuit_from_operations(comb.circuit.n_qubits(), ops), comb.holes};
}

Circuit route_circuit(const Circuit& c, const Topology& g) {
  if (c.n_qubits() != g.n_vertices()) {
    throw SynthesisError("circuit has " + std::to_string(c.n_qubits()) + " qubits but the topology has " +
                         std::to_string(g.n_vertices()) + " vertices");
  }
  const Decomposition d = decompose(c);
  return compose(combsynth(d.comb, g), d.plugging);
}

}  // namespace qcomb
