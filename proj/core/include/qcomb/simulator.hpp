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
#include <map>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "qcomb/circuit.hpp"

namespace qcomb {

using Matrix2 = Eigen::Matrix2cd;
using Unitary = Eigen::MatrixXcd;

/// Unitaries bound to opaque single-qubit gate labels.
using GateBindings = std::map<std::string, Matrix2>;

inline constexpr std::size_t kMaxSimulatedQubits = 12;

/// Matrix of a built-in gate: h, x, z, s, t, rz(θ), rx(θ), u(θ,φ,λ).
/// Returns false when the label/parameter count names no built-in gate.
bool builtin_gate_matrix(const SingleQubitGate& g, Matrix2& out);

/// Full 2^n × 2^n unitary of the circuit, qubit 0 the least significant bit
/// of the basis index. A binding takes precedence over a built-in gate of
/// the same label. Throws std::invalid_argument for an unbound opaque label,
/// a binding that is not unitary within 1e-12, or more than
/// kMaxSimulatedQubits qubits.
Unitary simulate_unitary(const Circuit& c, const GateBindings& bindings = {});

/// |tr(A†B)| / dim, which is 1 exactly when A and B agree up to a phase.
double trace_overlap(const Unitary& a, const Unitary& b);

bool equivalent_up_to_phase(const Circuit& a, const Circuit& b, const GateBindings& bindings = {},
                            double tolerance = 1e-9);

/// Haar-random 2×2 unitary.
Matrix2 random_unitary(std::mt19937_64& rng);

/// Binds a fresh random unitary to every label in the circuits that is not
/// a built-in gate.
GateBindings random_bindings(const Circuit& a, const Circuit& b, std::mt19937_64& rng);

}  // namespace qcomb
