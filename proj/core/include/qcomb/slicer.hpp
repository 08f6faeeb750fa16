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

#include <vector>

#include "qcomb/circuit.hpp"
#include "qcomb/topology.hpp"

namespace qcomb {

/// A maximal run of consecutive CNOTs, or of consecutive single-qubit gates.
struct Segment {
  bool cnot_only = false;
  Circuit gates;
};

/// Splits the gate list at every change between CNOT and single-qubit
/// gates. Concatenating the segments gives back `c`.
std::vector<Segment> slice(const Circuit& c);

/// Gates of all segments, in order.
Circuit flatten(const std::vector<Segment>& segments, std::size_t n_qubits);

/// Replaces every CNOT segment with rowcol of its parity matrix over the
/// whole topology; single-qubit segments pass through unchanged.
Circuit slice_route(const Circuit& c, const Topology& g);

}  // namespace qcomb
