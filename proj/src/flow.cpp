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

#include "paramx/flow.hpp"

#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "paramx/error.hpp"

namespace paramx {
namespace {

class ResidualNetwork {
 public:
  struct Arc {
    Vertex to;
    int cap;
    Weight cost;
    EdgeId original;  // -1 on reverse arcs
  };

  ResidualNetwork(const DiGraph& g, std::span<const EdgeId> allowed)
      : n_(g.num_vertices()), adj_(n_), potential_(n_, 0) {
    for (EdgeId id : allowed) {
      if (id < 0 || id >= g.num_edges()) {
        fail(ErrorCode::kInput, "edge index " + std::to_string(id) + " out of range");
      }
      const Edge& e = g.edge(id);
      adj_[e.tail].push_back(arcs_.size());
      arcs_.push_back({e.head, 1, e.weight, id});
      adj_[e.head].push_back(arcs_.size());
      arcs_.push_back({e.tail, 0, -e.weight, -1});
    }
  }

  // One shortest augmenting path under reduced costs. Potentials start at
  // zero, valid because every original cost is nonnegative.
  bool augment(Vertex s, Vertex t) {
    std::vector<Weight> dist(n_, kUnreachable);
    std::vector<std::size_t> via(n_, kNoArc);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (std::size_t a : adj_[v]) {
        const Arc& arc = arcs_[a];
        if (arc.cap == 0) continue;
        Weight nd = d + arc.cost + potential_[v] - potential_[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          via[arc.to] = a;
          heap.emplace(nd, arc.to);
        }
      }
    }
    if (dist[t] >= kUnreachable) return false;
    for (Vertex v = 0; v < n_; ++v) {
      if (dist[v] < kUnreachable) potential_[v] += dist[v];
    }
    for (Vertex v = t; v != s;) {
      std::size_t a = via[v];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      v = arcs_[a ^ 1].to;
    }
    return true;
  }

  // Flow on original edge arcs: the forward arc is saturated.
  std::vector<int> edge_flow(int num_edges) const {
    std::vector<int> flow(num_edges, 0);
    for (std::size_t a = 0; a < arcs_.size(); a += 2) {
      if (arcs_[a].cap == 0) flow[arcs_[a].original] = 1;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);

  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Weight> potential_;
};

}  // namespace

DisjointPathsResult min_cost_disjoint_paths(const DiGraph& g, std::span<const EdgeId> allowed,
                                            Vertex s, Vertex t, int demand) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t)) fail(ErrorCode::kInput, "vertex id out of range");
  if (s == t) fail(ErrorCode::kInput, "source equals sink");
  if (demand < 1) fail(ErrorCode::kInput, "demand must be >= 1");

  ResidualNetwork network(g, allowed);
  DisjointPathsResult result;
  while (result.achieved < demand && network.augment(s, t)) ++result.achieved;
  result.feasible = result.achieved == demand;
  result.edge_flow = network.edge_flow(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (result.edge_flow[id]) result.edges.push_back(id);
  }
  result.cost = g.cost(result.edges);
  return result;
}

DisjointPathsResult min_cost_disjoint_paths(const DiGraph& g, Vertex s, Vertex t, int demand) {
  std::vector<EdgeId> all(g.num_edges());
  std::iota(all.begin(), all.end(), 0);
  return min_cost_disjoint_paths(g, all, s, t, demand);
}

std::vector<std::vector<EdgeId>> decompose_paths(const DiGraph& g, const EdgeSet& edges, Vertex s,
                                                 Vertex t) {
  std::vector<bool> unused(g.num_edges(), false);
  for (EdgeId id : edges) unused.at(id) = true;
  std::vector<std::vector<EdgeId>> paths;
  while (true) {
    // BFS over unused edges; a found path is removed before the next round.
    std::vector<EdgeId> via(g.num_vertices(), -1);
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      Vertex v = queue.front();
      queue.pop();
      for (EdgeId id : g.out_edges(v)) {
        Vertex w = g.edge(id).head;
        if (unused[id] && !seen[w]) {
          seen[w] = true;
          via[w] = id;
          queue.push(w);
        }
      }
    }
    if (!seen[t]) break;
    std::vector<EdgeId> path;
    for (Vertex v = t; v != s; v = g.edge(via[v]).tail) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    for (EdgeId id : path) unused[id] = false;
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace paramx
