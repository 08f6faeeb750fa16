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
#include <vector>

#include "qcomb/circuit.hpp"
#include "qcomb/comb.hpp"
#include "qcomb/gf2.hpp"
#include "qcomb/rowcol.hpp"
#include "qcomb/topology.hpp"

namespace qcomb {

/// Progress of comb resynthesis: the comb's parity matrix under elimination,
/// the temporal qubits still to extract, and the logical vertices that still
/// carry one. Row operations only ever combine available temporal qubits,
/// one per active logical vertex.
class ExtractionState {
 public:
  /// Throws SynthesisError for an invalid comb or when the number of hole
  /// chains differs from the vertex count of `g`.
  ExtractionState(const Comb& comb, const Topology& g);

  const BitMatrix& matrix() const noexcept { return p_; }
  std::size_t n_temporal() const noexcept { return p_.rows(); }
  std::size_t n_logical() const noexcept { return t_.size(); }
  bool done() const noexcept { return remaining_ == 0; }

  bool is_live(Qubit q) const { return live_.at(q); }
  /// Live and not waiting on a live later temporal qubit of its chain.
  bool is_available(Qubit q) const;
  /// Current available temporal qubit of logical vertex v, or of its head
  /// once the whole chain is extracted.
  Qubit t(Vertex v) const { return t_.at(v); }
  Vertex owner(Qubit q) const { return owner_.at(q); }
  const VertexMask& active_logical() const noexcept { return active_; }

  /// One row per logical vertex: row t(v) of the full matrix.
  BitMatrix build_submatrix() const;

  /// Whether row t(e) and column e can be reduced to unit vectors using
  /// only operations between available rows without disconnecting the
  /// remaining vertices.
  bool is_extractible(Qubit e) const;

  /// Tries the qubits of the latest gate not yet touching an extracted
  /// qubit, control first, walking backwards through the circuit, then any
  /// other available qubit from the highest index down. Throws
  /// SynthesisError when nothing is extractible.
  Qubit choose_extractible() const;

  /// Eliminates column e and row t(e), then retires e. Returns the row
  /// operations applied, in temporal-qubit indices.
  std::vector<RowOp> extract(Qubit e);

 private:
  Topology g_;
  std::vector<Cnot> gates_;
  BitMatrix p_;
  std::vector<bool> live_;
  std::vector<Vertex> owner_;
  std::vector<Qubit> predecessor_;
  std::vector<Qubit> successor_;
  std::vector<Qubit> t_;
  VertexMask active_;
  std::size_t remaining_ = 0;
  std::size_t live_gate_end_ = 0;
};

struct ExtractionStep {
  Qubit extracted = 0;
  std::vector<RowOp> ops;
};

struct CombSynthTrace {
  std::vector<ExtractionStep> steps;
};

/// Resynthesises the comb circuit so that every CNOT joins temporal qubits
/// whose logical owners are adjacent in `g`. The holes and the parity matrix
/// are preserved. Throws SynthesisError on invalid input.
Comb combsynth(const Comb& comb, const Topology& g, CombSynthTrace* trace = nullptr);

/// Cuts out the single-qubit gates, resynthesises the comb, and plugs the
/// gates back in.
Circuit route_circuit(const Circuit& c, const Topology& g);

}  // namespace qcomb
