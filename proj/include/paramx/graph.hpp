// Copyright 2026 The paramx Authors.
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

#ifndef PARAMX_GRAPH_HPP_
#define PARAMX_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace paramx {

using Vertex = int;
using EdgeId = int;
using Weight = std::int64_t;

// Sentinel distance. Small enough that adding two of them cannot overflow.
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max() / 4;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of edge indices.
using EdgeSet = std::vector<EdgeId>;

EdgeSet make_edge_set(std::vector<EdgeId> ids);
EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);

// Directed graph on vertices 0..n-1 with nonnegative integer edge weights.
// Self-loops and parallel (tail, head) pairs are rejected at construction.
// Immutable once built.
class DiGraph {
 public:
  DiGraph() = default;
  DiGraph(int num_vertices, std::vector<Edge> edges);

  [[nodiscard]] int num_vertices() const { return n_; }
  [[nodiscard]] int num_edges() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_.at(id); }

  // Incident edge ids in increasing index order.
  [[nodiscard]] std::span<const EdgeId> out_edges(Vertex v) const { return out_[v]; }
  [[nodiscard]] std::span<const EdgeId> in_edges(Vertex v) const { return in_[v]; }

  [[nodiscard]] std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const;
  [[nodiscard]] bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  // Sum of weights; throws on an out-of-range id.
  [[nodiscard]] Weight cost(std::span<const EdgeId> ids) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

// Edge i of the result is edge i of `g` with its orientation flipped, so edge
// sets computed on the reverse graph map back by index.
DiGraph reverse(const DiGraph& g);

// Vertices reachable from `src` using only the listed edges, sorted.
std::vector<Vertex> reachable(const DiGraph& g, Vertex src,
                              std::span<const EdgeId> restricted_to);
std::vector<Vertex> reachable(const DiGraph& g, Vertex src);

// All-pairs shortest paths by repeated Dijkstra. Relaxation scans edges in
// index order and only accepts strict improvements, so the recovered paths
// are deterministic.
class ShortestPaths {
 public:
  explicit ShortestPaths(const DiGraph& g);

  [[nodiscard]] Weight distance(Vertex from, Vertex to) const {
    return dist_[index(from, to)];
  }
  [[nodiscard]] bool reachable(Vertex from, Vertex to) const {
    return distance(from, to) < kUnreachable;
  }
  // Edge ids along a shortest from->to path, in walk order. Empty when
  // from == to or when `to` is unreachable.
  [[nodiscard]] std::vector<EdgeId> path(Vertex from, Vertex to) const;

 private:
  [[nodiscard]] std::size_t index(Vertex from, Vertex to) const {
    return static_cast<std::size_t>(from) * n_ + to;
  }

  std::vector<Vertex> edge_tail_;
  int n_;
  std::vector<Weight> dist_;
  std::vector<EdgeId> parent_edge_;
};

}  // namespace paramx

#endif  // PARAMX_GRAPH_HPP_
