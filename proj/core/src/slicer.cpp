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

#include "qcomb/slicer.hpp"

#include <string>

#include "qcomb/errors.hpp"
#include "qcomb/rowcol.hpp"

namespace qcomb {

std::vector<Segment> slice(const Circuit& c) {
  std::vector<Segment> out;
  for (const auto& g : c.gates()) {
    const bool cx = is_cnot(g);
    if (out.empty() || out.back().cnot_only != cx) out.push_back(Segment{cx, Circuit(c.n_qubits())});
    out.back().gates.add(g);
  }
  return out;
}

Circuit flatten(const std::vector<Segment>& segments, std::size_t n_qubits) {
  Circuit out(n_qubits);
  for (const auto& s : segments) out.append(s.gates);
  return out;
}

Circuit slice_route(const Circuit& c, const Topology& g) {
  if (c.n_qubits() != g.n_vertices()) {
    throw SynthesisError("circuit has " + std::to_string(c.n_qubits()) + " qubits but the topology has " +
                         std::to_string(g.n_vertices()) + " vertices");
  }
  Circuit out(c.n_qubits());
  for (const auto& s : slice(c)) {
    out.append(s.cnot_only ? rowcol(parity_matrix(s.gates), g) : s.gates);
  }
  return out;
}

}  // namespace qcomb
