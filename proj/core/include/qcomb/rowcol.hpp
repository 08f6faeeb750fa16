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
#include <limits>
#include <span>
#include <vector>

#include "qcomb/circuit.hpp"
#include "qcomb/gf2.hpp"
#include "qcomb/topology.hpp"

namespace qcomb {

/// R(src, dst): row dst ^= row src, emitted as CNOT(src, dst).
struct RowOp {
  std::size_t src = 0;
  std::size_t dst = 0;

  friend bool operator==(const RowOp&, const RowOp&) = default;
  friend auto operator<=>(const RowOp&, const RowOp&) = default;
};

/// Marks a topology vertex that owns no matrix row.
inline constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

/// Clears column `pivot_col` on every row except the pivot vertex's row,
/// using row operations along a Steiner tree of the active vertices.
/// `vertex_rows[v]` is the matrix row owned by vertex v, or kNoRow when v is
/// inactive; only active rows are read or written. Applies the operations to
/// `p` and returns them in application order, in matrix-row indices. Throws
/// SynthesisError when the column is zero on all active rows.
std::vector<RowOp> eliminate_column(BitMatrix& p, const Topology& g, std::span<const std::size_t> vertex_rows,
                                    Vertex pivot, std::size_t pivot_col);

/// Turns the pivot vertex's row into the unit vector at `pivot_col` by adding
/// other active rows along a Steiner tree. The column must already be unit.
/// Throws SynthesisError when no subset of active rows works.
std::vector<RowOp> eliminate_row(BitMatrix& p, const Topology& g, std::span<const std::size_t> vertex_rows,
                                 Vertex pivot, std::size_t pivot_col);

/// Synthesises a circuit with parity matrix `p` whose CNOTs all lie on
/// edges of `g`. Each round eliminates the lowest-index non-cutting vertex.
Circuit rowcol(const BitMatrix& p, const Topology& g);

/// As above with the elimination order fixed. Every vertex in `order` must
/// be non-cutting among those not yet eliminated.
Circuit rowcol(const BitMatrix& p, const Topology& g, std::span<const Vertex> order);

/// The row operations rowcol applies, in application order. The circuit is
/// these operations reversed.
std::vector<RowOp> rowcol_operations(const BitMatrix& p, const Topology& g, std::span<const Vertex> order = {});

/// CNOT circuit of the reversed operation list, on `n_qubits` qubits.
Circuit circuit_from_operations(std::size_t n_qubits, std::span<const RowOp> ops);

}  // namespace qcomb
