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

#include "qcomb/topology.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "embedded_topologies.hpp"

namespace qcomb {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Breadth-first search inside the active subgraph; neighbours are expanded
// in ascending order so parents are deterministic.
struct Bfs {
  std::vector<std::size_t> dist;
  std::vector<Vertex> parent;
};

Bfs bfs(const Topology& g, const VertexMask& active, std::span<const Vertex> sources) {
  Bfs out{std::vector<std::size_t>(g.n_vertices(), kUnreachable),
          std::vector<Vertex>(g.n_vertices(), kUnreachable)};
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (out.dist[s] == 0) continue;
    out.dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!active[w] || out.dist[w] != kUnreachable) continue;
      out.dist[w] = out.dist[v] + 1;
      out.parent[w] = v;
      queue.push_back(w);
    }
  }
  return out;
}

void add_path(const Bfs& from, Vertex to, std::set<Edge>& edges) {
  for (Vertex v = to; from.dist[v] != 0; v = from.parent[v]) {
    const Vertex p = from.parent[v];
    edges.insert({std::min(p, v), std::max(p, v)});
  }
}

// Spanning tree of the edge union rooted at `root`, with non-terminal leaves
// pruned, emitted in depth-first pre-order.
SteinerTree finish_tree(std::size_t n, const std::set<Edge>& edges, Vertex root,
                        const std::vector<bool>& is_terminal) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<Vertex> parent(n, kUnreachable);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> children(n);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      children[v].push_back(w);
      queue.push_back(w);
    }
  }

  std::function<bool(Vertex)> keep = [&](Vertex v) {
    auto& kids = children[v];
    kids.erase(std::remove_if(kids.begin(), kids.end(), [&](Vertex c) { return !keep(c); }), kids.end());
    return is_terminal[v] || !kids.empty();
  };
  keep(root);

  SteinerTree tree;
  tree.root = root;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v != root) tree.edges.push_back({parent[v], v});
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  return tree;
}

std::size_t sum_dist(std::initializer_list<std::size_t> parts) {
  std::size_t total = 0;
  for (auto d : parts) {
    if (d == kUnreachable) return kUnreachable;
    total += d;
  }
  return total;
}

// Minimal trees for at most four terminals. Every full Steiner topology on
// four terminals pairs them around two (possibly coincident) branch points,
// so minimising over pairings and branch-point positions is exact. Among
// minimal trees, branch points nearest the root win.
std::set<Edge> small_steiner(const Topology& g, const VertexMask& active, const std::vector<Vertex>& terms,
                             const Bfs& from_root) {
  const std::size_t n = g.n_vertices();
  std::vector<Bfs> from;
  for (Vertex t : terms) from.push_back(bfs(g, active, std::span<const Vertex>(&t, 1)));
  std::set<Edge> edges;

  if (terms.size() == 2) {
    add_path(from[0], terms[1], edges);
    return edges;
  }
  if (terms.size() == 3) {
    std::pair best{kUnreachable, kUnreachable};
    Vertex centre = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!active[v]) continue;
      const std::pair cost{sum_dist({from[0].dist[v], from[1].dist[v], from[2].dist[v]}), from_root.dist[v]};
      if (cost < best) {
        best = cost;
        centre = v;
      }
    }
    for (const auto& f : from) add_path(f, centre, edges);
    return edges;
  }

  static constexpr std::size_t kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::vector<Bfs> all;
  all.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    all.push_back(active[v] ? bfs(g, active, std::span<const Vertex>(&v, 1)) : Bfs{});
  }
  std::pair best{kUnreachable, kUnreachable};
  std::size_t best_pairing = 0;
  Vertex best_u = 0;
  Vertex best_v = 0;
  for (std::size_t p = 0; p < 3; ++p) {
    const auto& [a, b, c, d] = kPairings[p];
    for (Vertex u = 0; u < n; ++u) {
      if (!active[u]) continue;
      const std::size_t left = sum_dist({from[a].dist[u], from[b].dist[u]});
      if (left == kUnreachable) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (!active[v]) continue;
        const std::pair cost{sum_dist({left, all[u].dist[v], from[c].dist[v], from[d].dist[v]}),
                             from_root.dist[u] + from_root.dist[v]};
        if (cost < best) {
          best = cost;
          best_pairing = p;
          best_u = u;
          best_v = v;
        }
      }
    }
  }
  const auto& [a, b, c, d] = kPairings[best_pairing];
  add_path(from[a], best_u, edges);
  add_path(from[b], best_u, edges);
  add_path(all[best_u], best_v, edges);
  add_path(from[c], best_v, edges);
  add_path(from[d], best_v, edges);
  return edges;
}

std::set<Edge> path_insertion_steiner(const Topology& g, const VertexMask& active,
                                      const std::vector<Vertex>& terms, Vertex root) {
  std::set<Edge> edges;
  std::vector<Vertex> in_tree{root};
  std::vector<bool> connected(g.n_vertices(), false);
  connected[root] = true;
  for (;;) {
    const Bfs reach = bfs(g, active, in_tree);
    Vertex next = kUnreachable;
    for (Vertex t : terms) {
      if (connected[t]) continue;
      if (next == kUnreachable || reach.dist[t] < reach.dist[next]) next = t;
    }
    if (next == kUnreachable) break;
    for (Vertex v = next; !connected[v]; v = reach.parent[v]) {
      connected[v] = true;
      in_tree.push_back(v);
      const Vertex p = reach.parent[v];
      edges.insert({std::min(p, v), std::max(p, v)});
    }
  }
  return edges;
}

void tarjan(const Topology& g, const VertexMask& active, Vertex v, Vertex parent, std::size_t& timer,
            std::vector<std::size_t>& disc, std::vector<std::size_t>& low, std::vector<bool>& cut) {
  disc[v] = low[v] = ++timer;
  std::size_t children = 0;
  for (Vertex w : g.neighbors(v)) {
    if (!active[w] || w == parent) continue;
    if (disc[w] != 0) {
      low[v] = std::min(low[v], disc[w]);
      continue;
    }
    ++children;
    tarjan(g, active, w, v, timer, disc, low, cut);
    low[v] = std::min(low[v], low[w]);
    if (parent != kUnreachable && low[w] >= disc[v]) cut[v] = true;
  }
  if (parent == kUnreachable && children > 1) cut[v] = true;
}

}  // namespace

Topology::Topology(std::string name, std::size_t n_vertices, std::vector<Edge> edges)
    : name_(std::move(name)), adjacency_(n_vertices) {
  if (n_vertices == 0) throw std::invalid_argument("topology '" + name_ + "' has no vertices");
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a >= n_vertices || b >= n_vertices) {
      throw std::invalid_argument("topology '" + name_ + "': edge endpoint out of range");
    }
    if (a == b) throw std::invalid_argument("topology '" + name_ + "': self-loop on " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw std::invalid_argument("topology '" + name_ + "': duplicate edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
    edges_.push_back({a, b});
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (!is_connected(*this, full_mask(*this))) {
    throw std::invalid_argument("topology '" + name_ + "' is not connected");
  }
}

Topology Topology::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Topology("complete-" + std::to_string(n), n, std::move(edges));
}

Topology Topology::line(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  return Topology("line-" + std::to_string(n), n, std::move(edges));
}

Topology Topology::grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Topology("grid-" + std::to_string(rows) + "x" + std::to_string(cols), rows * cols, std::move(edges));
}

bool Topology::has_edge(Vertex a, Vertex b) const {
  if (a >= n_vertices() || b >= n_vertices()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

Topology Topology::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("Topology::induced: repeated vertex");
  }
  std::vector<std::size_t> index(n_vertices(), kUnreachable);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= n_vertices()) throw std::invalid_argument("Topology::induced: vertex out of range");
    index[sorted[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : edges_) {
    if (index[a] != kUnreachable && index[b] != kUnreachable) edges.push_back({index[a], index[b]});
  }
  return Topology(name_ + "-induced", sorted.size(), std::move(edges));
}

VertexMask full_mask(const Topology& g) { return VertexMask(g.n_vertices(), true); }

bool is_connected(const Topology& g, const VertexMask& active) {
  const auto first = std::find(active.begin(), active.end(), true);
  if (first == active.end()) return true;
  const Vertex start = static_cast<Vertex>(first - active.begin());
  const Bfs reach = bfs(g, active, std::span<const Vertex>(&start, 1));
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (active[v] && reach.dist[v] == kUnreachable) return false;
  }
  return true;
}

std::vector<Vertex> non_cutting_vertices(const Topology& g, const VertexMask& active) {
  if (active.size() != g.n_vertices()) throw std::invalid_argument("non_cutting_vertices: mask size mismatch");
  const auto first = std::find(active.begin(), active.end(), true);
  if (first == active.end()) throw std::invalid_argument("non_cutting_vertices: empty active set");
  if (!is_connected(g, active)) throw std::invalid_argument("non_cutting_vertices: active set is disconnected");

  const std::size_t n = g.n_vertices();
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> cut(n, false);
  std::size_t timer = 0;
  tarjan(g, active, static_cast<Vertex>(first - active.begin()), kUnreachable, timer, disc, low, cut);

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (active[v] && !cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> SteinerTree::vertices() const {
  std::vector<Vertex> out{root};
  for (const auto& e : edges) out.push_back(e.second);
  return out;
}

SteinerTree steiner_tree(const Topology& g, const VertexMask& active, std::span<const Vertex> terminals,
                         std::optional<Vertex> root) {
  if (active.size() != g.n_vertices()) throw std::invalid_argument("steiner_tree: mask size mismatch");
  std::vector<Vertex> terms(terminals.begin(), terminals.end());
  if (root) terms.push_back(*root);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) throw std::invalid_argument("steiner_tree: no terminals");
  std::vector<bool> is_terminal(g.n_vertices(), false);
  for (Vertex t : terms) {
    if (t >= g.n_vertices() || !active[t]) {
      throw std::invalid_argument("steiner_tree: terminal " + std::to_string(t) + " is not active");
    }
    is_terminal[t] = true;
  }
  const Vertex start = root.value_or(terms.front());
  const Bfs reach = bfs(g, active, std::span<const Vertex>(&start, 1));
  for (Vertex t : terms) {
    if (reach.dist[t] == kUnreachable) {
      throw std::invalid_argument("steiner_tree: terminal " + std::to_string(t) + " is unreachable");
    }
  }
  if (terms.size() == 1) return SteinerTree{start, {}};
  const std::set<Edge> edges =
      terms.size() <= 4 ? small_steiner(g, active, terms, reach) : path_insertion_steiner(g, active, terms, start);
  return finish_tree(g.n_vertices(), edges, start, is_terminal);
}

Topology load_topology(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed topology JSON: ") + e.what());
  }
  try {
    const auto name = doc.at("name").get<std::string>();
    const auto n = doc.at("num_qubits").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair [a, b]");
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Topology(name, n, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed topology JSON: ") + e.what());
  }
}

Topology builtin_topology(std::string_view name) {
  for (const auto& entry : detail::embedded_topologies()) {
    if (entry.name == name) return load_topology(entry.json);
  }
  const auto sized = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    const auto digits = name.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0) return std::nullopt;
    return n;
  };
  if (auto n = sized("complete-")) return Topology::complete(*n);
  if (auto n = sized("line-")) return Topology::line(*n);
  throw std::invalid_argument("unknown topology '" + std::string(name) + "'");
}

std::vector<std::string> builtin_topology_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::embedded_topologies()) out.emplace_back(entry.name);
  return out;
}

}  // namespace qcomb
