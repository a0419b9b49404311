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

#include "paramx/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "paramx/error.hpp"

namespace paramx {

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DiGraph::DiGraph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) fail(ErrorCode::kInput, "negative vertex count");
  out_.resize(n_);
  in_.resize(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string where = "edge " + std::to_string(i);
    if (!valid_vertex(e.tail) || !valid_vertex(e.head)) {
      fail(ErrorCode::kInput, where + ": vertex id out of range");
    }
    if (e.tail == e.head) fail(ErrorCode::kInput, where + ": self-loop");
    if (e.weight < 0) fail(ErrorCode::kInput, where + ": negative weight");
    for (EdgeId other : out_[e.tail]) {
      if (edges_[other].head == e.head) {
        fail(ErrorCode::kInput, where + ": duplicate edge (" +
                                    std::to_string(e.tail) + "," +
                                    std::to_string(e.head) + ")");
      }
    }
    out_[e.tail].push_back(static_cast<EdgeId>(i));
    in_[e.head].push_back(static_cast<EdgeId>(i));
  }
}

std::optional<EdgeId> DiGraph::find_edge(Vertex tail, Vertex head) const {
  if (!valid_vertex(tail)) return std::nullopt;
  for (EdgeId id : out_[tail]) {
    if (edges_[id].head == head) return id;
  }
  return std::nullopt;
}

Weight DiGraph::cost(std::span<const EdgeId> ids) const {
  Weight total = 0;
  for (EdgeId id : ids) {
    if (id < 0 || id >= num_edges()) {
      fail(ErrorCode::kInput, "edge index " + std::to_string(id) + " out of range");
    }
    total += edges_[id].weight;
  }
  return total;
}

DiGraph reverse(const DiGraph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.edges().size());
  for (const Edge& e : g.edges()) flipped.push_back({e.head, e.tail, e.weight});
  return DiGraph(g.num_vertices(), std::move(flipped));
}

std::vector<Vertex> reachable(const DiGraph& g, Vertex src,
                              std::span<const EdgeId> restricted_to) {
  if (!g.valid_vertex(src)) fail(ErrorCode::kInput, "source vertex out of range");
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (EdgeId id : restricted_to) {
    if (id < 0 || id >= g.num_edges()) {
      fail(ErrorCode::kInput, "edge index " + std::to_string(id) + " out of range");
    }
    adj[g.edge(id).tail].push_back(g.edge(id).head);
  }
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack{src};
  seen[src] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> reachable(const DiGraph& g, Vertex src) {
  std::vector<EdgeId> all(g.num_edges());
  for (EdgeId i = 0; i < g.num_edges(); ++i) all[i] = i;
  return reachable(g, src, all);
}

ShortestPaths::ShortestPaths(const DiGraph& g)
    : n_(g.num_vertices()),
      dist_(static_cast<std::size_t>(n_) * n_, kUnreachable),
      parent_edge_(static_cast<std::size_t>(n_) * n_, -1) {
  edge_tail_.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edge_tail_.push_back(e.tail);

  using Item = std::pair<Weight, Vertex>;
  for (Vertex src = 0; src < n_; ++src) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist_[index(src, src)] = 0;
    heap.emplace(0, src);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist_[index(src, v)]) continue;
      for (EdgeId id : g.out_edges(v)) {
        const Edge& e = g.edge(id);
        Weight nd = d + e.weight;
        if (nd < dist_[index(src, e.head)]) {
          dist_[index(src, e.head)] = nd;
          parent_edge_[index(src, e.head)] = id;
          heap.emplace(nd, e.head);
        }
      }
    }
  }
}

std::vector<EdgeId> ShortestPaths::path(Vertex from, Vertex to) const {
  std::vector<EdgeId> out;
  if (from == to || !reachable(from, to)) return out;
  for (Vertex v = to; v != from;) {
    EdgeId id = parent_edge_[index(from, v)];
    out.push_back(id);
    v = edge_tail_[id];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace paramx
