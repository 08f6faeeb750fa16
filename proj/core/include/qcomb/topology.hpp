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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcomb {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected connectivity graph over logical qubits. Always connected,
/// without self-loops or duplicate edges.
class Topology {
 public:
  /// Edges are stored with the smaller endpoint first. Throws
  /// std::invalid_argument on a self-loop, duplicate, out-of-range endpoint,
  /// or a disconnected graph.
  Topology(std::string name, std::size_t n_vertices, std::vector<Edge> edges);

  static Topology complete(std::size_t n);
  static Topology line(std::size_t n);
  static Topology grid(std::size_t rows, std::size_t cols);

  const std::string& name() const noexcept { return name_; }
  std::size_t n_vertices() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbours of v in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Subgraph on `vertices`, relabelled to 0..k-1 in ascending vertex order.
  Topology induced(std::span<const Vertex> vertices) const;

 private:
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Membership mask over the vertices of a topology.
using VertexMask = std::vector<bool>;

VertexMask full_mask(const Topology& g);
bool is_connected(const Topology& g, const VertexMask& active);

/// Vertices of `active` whose removal leaves the induced subgraph on the
/// rest connected (or empty), ascending. Throws std::invalid_argument when
/// the active subgraph is empty or disconnected.
std::vector<Vertex> non_cutting_vertices(const Topology& g, const VertexMask& active);

/// A tree inside the topology. `edges` holds (parent, child) pairs in
/// depth-first pre-order from `root`, so reverse iteration visits every
/// child before its parent.
struct SteinerTree {
  Vertex root = 0;
  std::vector<Edge> edges;

  /// Root plus every child, in pre-order.
  std::vector<Vertex> vertices() const;
};

/// Tree within the active subgraph spanning all terminals, rooted at `root`
/// (which must be a terminal) or at the lowest terminal. Minimal for up to
/// four terminals; beyond that, nearest-terminal path insertion with
/// lowest-index tie-breaking. Throws std::invalid_argument when a terminal
/// is inactive or unreachable.
SteinerTree steiner_tree(const Topology& g, const VertexMask& active, std::span<const Vertex> terminals,
                         std::optional<Vertex> root = std::nullopt);

/// Parses `{"name": str, "num_qubits": int, "edges": [[a,b], ...]}`.
Topology load_topology(std::string_view json_text);

/// One of 9q-square, 16q-square, rigetti-16q-aspen, ibm-qx5, ibm-q20-tokyo,
/// or complete-<n> / line-<n>. Throws std::invalid_argument otherwise.
Topology builtin_topology(std::string_view name);

/// Names of the shipped device topologies.
std::vector<std::string> builtin_topology_names();

}  // namespace qcomb
