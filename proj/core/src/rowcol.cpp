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

#include "qcomb/rowcol.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcomb/errors.hpp"

namespace qcomb {

namespace {

VertexMask active_mask(const Topology& g, std::span<const std::size_t> vertex_rows) {
  if (vertex_rows.size() != g.n_vertices()) {
    throw std::invalid_argument("vertex_rows must have one entry per topology vertex");
  }
  VertexMask mask(g.n_vertices(), false);
  for (Vertex v = 0; v < g.n_vertices(); ++v) mask[v] = vertex_rows[v] != kNoRow;
  return mask;
}

void check_pivot(std::span<const std::size_t> vertex_rows, Vertex pivot) {
  if (pivot >= vertex_rows.size() || vertex_rows[pivot] == kNoRow) {
    throw std::invalid_argument("pivot vertex " + std::to_string(pivot) + " owns no row");
  }
}

void apply(BitMatrix& p, std::vector<RowOp>& ops, std::size_t src, std::size_t dst) {
  p.row_add(src, dst);
  ops.push_back({src, dst});
}

}  // namespace

std::vector<RowOp> eliminate_column(BitMatrix& p, const Topology& g, std::span<const std::size_t> vertex_rows,
                                    Vertex pivot, std::size_t pivot_col) {
  const VertexMask mask = active_mask(g, vertex_rows);
  check_pivot(vertex_rows, pivot);

  std::vector<Vertex> terminals;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (mask[v] && p.get(vertex_rows[v], pivot_col)) terminals.push_back(v);
  }
  if (terminals.empty()) {
    throw SynthesisError("column " + std::to_string(pivot_col) + " is zero on every active row");
  }
  if (terminals.size() == 1 && terminals.front() == pivot) return {};

  const SteinerTree tree = steiner_tree(g, mask, terminals, pivot);
  std::vector<RowOp> ops;
  for (auto it = tree.edges.rbegin(); it != tree.edges.rend(); ++it) {
    const auto [parent, child] = *it;
    if (!p.get(vertex_rows[parent], pivot_col)) apply(p, ops, vertex_rows[child], vertex_rows[parent]);
  }
  for (auto it = tree.edges.rbegin(); it != tree.edges.rend(); ++it) {
    const auto [parent, child] = *it;
    apply(p, ops, vertex_rows[parent], vertex_rows[child]);
  }
  return ops;
}

std::vector<RowOp> eliminate_row(BitMatrix& p, const Topology& g, std::span<const std::size_t> vertex_rows,
                                 Vertex pivot, std::size_t pivot_col) {
  const VertexMask mask = active_mask(g, vertex_rows);
  check_pivot(vertex_rows, pivot);
  const std::size_t pivot_row = vertex_rows[pivot];

  BitVector target = p.row(pivot_row);
  target.flip(pivot_col);
  if (target.none()) return {};

  std::vector<Vertex> others;
  std::vector<BitVector> rows;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (!mask[v] || v == pivot) continue;
    others.push_back(v);
    rows.push_back(p.row(vertex_rows[v]));
  }
  const auto subset = solve_xor_subset(rows, target);
  if (!subset) {
    throw SynthesisError("row " + std::to_string(pivot_row) + " cannot be reduced with the active rows");
  }

  std::vector<Vertex> terminals{pivot};
  std::vector<bool> chosen(g.n_vertices(), false);
  for (std::size_t i : *subset) {
    terminals.push_back(others[i]);
    chosen[others[i]] = true;
  }
  const SteinerTree tree = steiner_tree(g, mask, terminals, pivot);

  std::vector<RowOp> ops;
  for (const auto& [parent, child] : tree.edges) {
    if (!chosen[child]) apply(p, ops, vertex_rows[child], vertex_rows[parent]);
  }
  for (auto it = tree.edges.rbegin(); it != tree.edges.rend(); ++it) {
    const auto [parent, child] = *it;
    apply(p, ops, vertex_rows[child], vertex_rows[parent]);
  }
  return ops;
}

std::vector<RowOp> rowcol_operations(const BitMatrix& p, const Topology& g, std::span<const Vertex> order) {
  const std::size_t n = g.n_vertices();
  if (!p.is_square() || p.rows() != n) {
    throw SynthesisError("parity matrix is " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                         " but the topology has " + std::to_string(n) + " vertices");
  }
  if (!is_invertible(p)) throw SynthesisError("parity matrix is singular");
  if (!order.empty() && order.size() != n) {
    throw std::invalid_argument("elimination order must list every vertex once");
  }

  BitMatrix work = p;
  std::vector<std::size_t> vertex_rows(n);
  for (Vertex v = 0; v < n; ++v) vertex_rows[v] = v;
  VertexMask active = full_mask(g);
  std::vector<RowOp> ops;

  for (std::size_t step = 0; step < n; ++step) {
    const std::vector<Vertex> candidates = non_cutting_vertices(g, active);
    Vertex v = candidates.front();
    if (!order.empty()) {
      v = order[step];
      if (!std::binary_search(candidates.begin(), candidates.end(), v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not a non-cutting active vertex");
      }
    }
    for (const auto& op : eliminate_column(work, g, vertex_rows, v, v)) ops.push_back(op);
    for (const auto& op : eliminate_row(work, g, vertex_rows, v, v)) ops.push_back(op);
    active[v] = false;
    vertex_rows[v] = kNoRow;
  }
  return ops;
}

Circuit circuit_from_operations(std::size_t n_qubits, std::span<const RowOp> ops) {
  Circuit c(n_qubits);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) c.cx(it->src, it->dst);
  return c;
}

Circuit rowcol(const BitMatrix& p, const Topology& g) {
  return circuit_from_operations(g.n_vertices(), rowcol_operations(p, g));
}

Circuit rowcol(const BitMatrix& p, const Topology& g, std::span<const Vertex> order) {
  return circuit_from_operations(g.n_vertices(), rowcol_operations(p, g, order));
}

}  // namespace qcomb
