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

#include <string>
#include <string_view>

#include "qcomb/circuit.hpp"

namespace qcomb {

/// Reads the QASM-2.0-flavoured circuit subset:
///
///   qreg q[N];
///   cx q[a],q[b];
///   <label> q[a];
///   <label>(θ[,φ[,λ]]) q[a];
///
/// with `//` comments. Whitespace, including line breaks, is insignificant.
/// Angles accept numbers, `pi`, and the operators + - * / with parentheses.
/// `OPENQASM` and `include` headers are accepted and ignored. Throws
/// ParseError with the 1-based line and column of the failure.
Circuit parse_circuit(std::string_view text);

/// Writes one statement per line; angles are printed so that parsing them
/// back yields the same doubles.
std::string write_circuit(const Circuit& c);

/// Formats an angle list as "(a,b,c)", or "" when empty.
std::string format_params(const std::vector<double>& params);

/// Parses "label" or "label(angles)" into a gate on qubit 0.
SingleQubitGate parse_gate_spec(std::string_view text);

}  // namespace qcomb
