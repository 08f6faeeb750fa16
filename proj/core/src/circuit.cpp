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

#include "qcomb/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcomb {

bool is_cnot(const Gate& g) noexcept { return std::holds_alternative<Cnot>(g); }

std::vector<Qubit> gate_qubits(const Gate& g) {
  if (const auto* cx = std::get_if<Cnot>(&g)) return {cx->control, cx->target};
  return {std::get<SingleQubitGate>(g).qubit};
}

bool touches(const Gate& g, Qubit q) noexcept {
  if (const auto* cx = std::get_if<Cnot>(&g)) return cx->control == q || cx->target == q;
  return std::get<SingleQubitGate>(g).qubit == q;
}

Circuit& Circuit::add(Gate g) {
  if (const auto* cx = std::get_if<Cnot>(&g)) {
    if (cx->control == cx->target) {
      throw std::invalid_argument("CNOT control and target must differ (qubit " +
                                  std::to_string(cx->control) + ")");
    }
    if (cx->control >= n_qubits_ || cx->target >= n_qubits_) {
      throw std::out_of_range("CNOT qubit index out of range for " + std::to_string(n_qubits_) +
                              "-qubit circuit");
    }
  } else {
    const auto& sq = std::get<SingleQubitGate>(g);
    if (sq.qubit >= n_qubits_) {
      throw std::out_of_range("gate '" + sq.label + "' qubit index out of range for " +
                              std::to_string(n_qubits_) + "-qubit circuit");
    }
    if (sq.label.empty()) throw std::invalid_argument("single-qubit gate needs a label");
  }
  gates_.push_back(std::move(g));
  return *this;
}

std::size_t Circuit::cnot_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), is_cnot));
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("Circuit::append: qubit count mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

BitMatrix parity_matrix(const Circuit& c) {
  BitMatrix p = BitMatrix::identity(c.n_qubits());
  for (const auto& g : c.gates()) {
    const auto* cx = std::get_if<Cnot>(&g);
    if (cx == nullptr) {
      throw std::invalid_argument("parity_matrix: circuit contains non-CNOT gate '" +
                                  std::get<SingleQubitGate>(g).label + "'");
    }
    p.row_add(cx->control, cx->target);
  }
  return p;
}

bool same_up_to_commutation(const Circuit& a, const Circuit& b) {
  if (a.n_qubits() != b.n_qubits() || a.size() != b.size()) return false;
  const auto per_qubit = [](const Circuit& c) {
    std::vector<std::vector<const Gate*>> lines(c.n_qubits());
    for (const auto& g : c.gates()) {
      for (Qubit q : gate_qubits(g)) lines[q].push_back(&g);
    }
    return lines;
  };
  const auto la = per_qubit(a);
  const auto lb = per_qubit(b);
  for (std::size_t q = 0; q < la.size(); ++q) {
    if (!std::equal(la[q].begin(), la[q].end(), lb[q].begin(), lb[q].end(),
                    [](const Gate* x, const Gate* y) { return *x == *y; })) {
      return false;
    }
  }
  return true;
}

}  // namespace qcomb
