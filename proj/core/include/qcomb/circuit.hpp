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
#include <string>
#include <variant>
#include <vector>

#include "qcomb/gf2.hpp"

namespace qcomb {

using Qubit = std::size_t;

struct Cnot {
  Qubit control = 0;
  Qubit target = 0;

  friend bool operator==(const Cnot&, const Cnot&) = default;
};

/// A single-qubit gate. The label is opaque unless it names one of the
/// simulator's built-in gates; params carry its angles, if any.
struct SingleQubitGate {
  std::string label;
  std::vector<double> params;
  Qubit qubit = 0;

  friend bool operator==(const SingleQubitGate&, const SingleQubitGate&) = default;
};

using Gate = std::variant<Cnot, SingleQubitGate>;

bool is_cnot(const Gate& g) noexcept;
/// Qubits touched by the gate: {control, target} or {qubit}.
std::vector<Qubit> gate_qubits(const Gate& g);
bool touches(const Gate& g, Qubit q) noexcept;

/// Ordered gate list over indexed qubits; the first gate executes first.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  Circuit& add(Gate g);
  Circuit& cx(Qubit control, Qubit target) { return add(Cnot{control, target}); }
  Circuit& gate(std::string label, Qubit q, std::vector<double> params = {}) {
    return add(SingleQubitGate{std::move(label), std::move(params), q});
  }

  std::size_t cnot_count() const noexcept;
  std::size_t single_qubit_count() const noexcept { return gates_.size() - cnot_count(); }
  bool is_cnot_only() const noexcept { return cnot_count() == gates_.size(); }

  /// Appends every gate of `other`, which must act on the same qubit count.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Parity matrix of a CNOT-only circuit: identity with R(control, target)
/// applied for every gate in execution order. Throws std::invalid_argument on
/// a non-CNOT gate.
BitMatrix parity_matrix(const Circuit& c);

/// True when both circuits have the same gate sequence on every qubit, i.e.
/// they differ only by reordering gates on disjoint qubits.
bool same_up_to_commutation(const Circuit& a, const Circuit& b);

}  // namespace qcomb
