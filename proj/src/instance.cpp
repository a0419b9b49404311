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

#include "paramx/instance.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "paramx/error.hpp"

namespace paramx {
namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

void check_vertex(const DiGraph& g, Vertex v, const std::string& field) {
  if (!g.valid_vertex(v)) fail(ErrorCode::kInput, field + ": vertex id out of range");
}

void check_distinct_terminals(const DiGraph& g, const std::vector<Vertex>& ts) {
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    check_vertex(g, ts[i], "terminals[" + str(i) + "]");
    if (!seen.insert(ts[i]).second) {
      fail(ErrorCode::kInput, "terminals[" + str(i) + "]: duplicate terminal");
    }
  }
}

void check_undirected(const DiGraph& g) {
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (g.find_edge(e.head, e.tail)) {
      fail(ErrorCode::kInput, "edges[" + str(i) +
                                  "]: undirected edge listed in both orientations");
    }
  }
}

// Unit-capacity augmenting paths on the sub-network, stopping at `need`.
int edge_disjoint_paths(const DiGraph& g, std::span<const EdgeId> edges, Vertex s,
                        Vertex t, int need) {
  struct Arc {
    Vertex to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> adj(g.num_vertices());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    adj[e.tail].push_back({e.head, 1, adj[e.head].size()});
    adj[e.head].push_back({e.tail, 0, adj[e.tail].size() - 1});
  }
  int flow = 0;
  while (flow < need) {
    std::vector<std::pair<Vertex, std::size_t>> via(g.num_vertices(), {-1, 0});
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      Vertex v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < adj[v].size(); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          via[a.to] = {v, i};
          queue.push_back(a.to);
        }
      }
    }
    if (!seen[t]) break;
    for (Vertex v = t; v != s;) {
      auto [u, i] = via[v];
      Arc& a = adj[u][i];
      a.cap -= 1;
      adj[v][a.rev].cap += 1;
      v = u;
    }
    ++flow;
  }
  return flow;
}

std::vector<bool> reach_mask(const DiGraph& g, Vertex src, std::span<const EdgeId> edges) {
  std::vector<bool> mask(g.num_vertices(), false);
  for (Vertex v : reachable(g, src, edges)) mask[v] = true;
  return mask;
}

}  // namespace

std::string_view kind_name(const Instance& instance) {
  struct Namer {
    std::string_view operator()(const DstInstance&) const { return "dst"; }
    std::string_view operator()(const ScssInstance&) const { return "scss"; }
    std::string_view operator()(const DsfInstance&) const { return "dsf"; }
    std::string_view operator()(const DsnInstance&) const { return "dsn"; }
    std::string_view operator()(const MecInstance&) const { return "mec"; }
    std::string_view operator()(const MccInstance&) const { return "mcc"; }
    std::string_view operator()(const SetCoverInstance&) const { return "setcover"; }
    std::string_view operator()(const ProjectionGame&) const { return "projgame"; }
  };
  return std::visit(Namer{}, instance);
}

void validate(const DstInstance& x) {
  check_vertex(x.graph, x.root, "root");
  if (x.terminals.empty()) fail(ErrorCode::kInput, "terminals: must be nonempty");
  check_distinct_terminals(x.graph, x.terminals);
}

void validate(const ScssInstance& x) {
  if (x.terminals.size() < 2) fail(ErrorCode::kInput, "terminals: need at least 2");
  check_distinct_terminals(x.graph, x.terminals);
  if (x.parameter && *x.parameter < 0) fail(ErrorCode::kInput, "p: must be nonnegative");
}

void validate(const DsfInstance& x) {
  if (x.pairs.empty()) fail(ErrorCode::kInput, "pairs: must be nonempty");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < x.pairs.size(); ++i) {
    const auto& [s, t] = x.pairs[i];
    const std::string field = "pairs[" + str(i) + "]";
    check_vertex(x.graph, s, field);
    check_vertex(x.graph, t, field);
    if (s == t) fail(ErrorCode::kInput, field + ": source equals sink");
    if (!seen.emplace(s, t).second) fail(ErrorCode::kInput, field + ": duplicate pair");
  }
}

void validate(const DsnInstance& x) {
  if (x.pairs.empty()) fail(ErrorCode::kInput, "pairs: must be nonempty");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < x.pairs.size(); ++i) {
    const DemandPair& p = x.pairs[i];
    const std::string field = "pairs[" + str(i) + "]";
    check_vertex(x.graph, p.source, field);
    check_vertex(x.graph, p.sink, field);
    if (p.source == p.sink) fail(ErrorCode::kInput, field + ": source equals sink");
    if (p.demand < 1) fail(ErrorCode::kInput, "demands[" + str(i) + "]: must be >= 1");
    if (!seen.emplace(p.source, p.sink).second) {
      fail(ErrorCode::kInput, field + ": duplicate pair");
    }
  }
}

void validate(const MecInstance& x) {
  if (x.k < 1) fail(ErrorCode::kInput, "k: must be >= 1");
  if (x.target_size && *x.target_size < 1) fail(ErrorCode::kInput, "p: must be >= 1");
  check_undirected(x.graph);
}

void validate(const MccInstance& x) {
  if (x.p < 1) fail(ErrorCode::kInput, "p: must be >= 1");
  if (static_cast<int>(x.colors.size()) != x.graph.num_vertices()) {
    fail(ErrorCode::kInput, "colors: need one color per vertex");
  }
  for (std::size_t i = 0; i < x.colors.size(); ++i) {
    if (x.colors[i] < 0) fail(ErrorCode::kInput, "colors[" + str(i) + "]: negative color");
  }
  check_undirected(x.graph);
}

void validate(const SetCoverInstance& x) {
  if (x.universe_size < 0) fail(ErrorCode::kInput, "universe: must be nonnegative");
  for (std::size_t i = 0; i < x.sets.size(); ++i) {
    for (std::int64_t e : x.sets[i]) {
      if (e < 0 || e >= x.universe_size) {
        fail(ErrorCode::kInput, "sets[" + str(i) + "]: element out of range");
      }
    }
  }
  if (!x.labels.empty() && x.labels.size() != x.sets.size()) {
    fail(ErrorCode::kInput, "labels: need one label per set");
  }
}

void validate(const ProjectionGame& x) {
  if (x.left < 0 || x.right < 0) fail(ErrorCode::kInput, "v1/v2: must be nonnegative");
  if (x.alphabet < 1) fail(ErrorCode::kInput, "sigma: must be >= 1");
  if (x.projection.size() != x.edges.size()) {
    fail(ErrorCode::kInput, "pi: need exactly one table per edge");
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    auto [a, b] = x.edges[i];
    if (a < 0 || a >= x.left || b < 0 || b >= x.right) {
      fail(ErrorCode::kInput, "edges[" + str(i) + "]: vertex id out of range");
    }
    if (!seen.emplace(a, b).second) fail(ErrorCode::kInput, "edges[" + str(i) + "]: duplicate edge");
    const auto& table = x.projection[i];
    if (static_cast<int>(table.size()) != x.alphabet) {
      fail(ErrorCode::kInput, "pi[" + str(i) + "]: table size must equal sigma");
    }
    for (int y : table) {
      if (y < 0 || y >= x.alphabet) fail(ErrorCode::kInput, "pi[" + str(i) + "]: label out of range");
    }
  }
}

void validate(const Instance& x) {
  std::visit([](const auto& inst) { validate(inst); }, x);
}

Solution Solution::edge_set(const DiGraph& g, EdgeSet edges, std::string producer) {
  Solution s;
  s.kind = Kind::kEdgeSet;
  s.items = make_edge_set(std::move(edges));
  s.cost = g.cost(s.items);
  s.producer = std::move(producer);
  return s;
}

Solution Solution::vertex_set(std::vector<Vertex> vertices, std::string producer) {
  Solution s;
  s.kind = Kind::kVertexSet;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  s.items = std::move(vertices);
  s.cost = static_cast<std::int64_t>(s.items.size());
  s.producer = std::move(producer);
  return s;
}

Solution Solution::set_collection(std::vector<int> sets, std::string producer) {
  Solution s = vertex_set(std::move(sets), std::move(producer));
  s.kind = Kind::kSetCollection;
  return s;
}

Solution Solution::reject(std::string producer) {
  Solution s;
  s.kind = Kind::kReject;
  s.producer = std::move(producer);
  return s;
}

bool is_feasible(const DstInstance& x, std::span<const EdgeId> edges) {
  auto seen = reach_mask(x.graph, x.root, edges);
  return std::all_of(x.terminals.begin(), x.terminals.end(),
                     [&](Vertex t) { return seen[t]; });
}

bool is_feasible(const ScssInstance& x, std::span<const EdgeId> edges) {
  // Every terminal reaches and is reached by the first one.
  const Vertex hub = x.terminals.front();
  auto forward = reach_mask(x.graph, hub, edges);
  DiGraph rev = reverse(x.graph);
  auto backward = reach_mask(rev, hub, edges);
  return std::all_of(x.terminals.begin(), x.terminals.end(),
                     [&](Vertex t) { return forward[t] && backward[t]; });
}

bool is_feasible(const DsfInstance& x, std::span<const EdgeId> edges) {
  for (const auto& [s, t] : x.pairs) {
    if (!reach_mask(x.graph, s, edges)[t]) return false;
  }
  return true;
}

bool is_feasible(const DsnInstance& x, std::span<const EdgeId> edges) {
  for (const DemandPair& p : x.pairs) {
    if (edge_disjoint_paths(x.graph, edges, p.source, p.sink, p.demand) < p.demand) {
      return false;
    }
  }
  return true;
}

std::int64_t induced_edge_count(const DiGraph& g, std::span<const Vertex> vertices) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : vertices) in.at(v) = true;
  std::int64_t count = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.tail] && in[e.head]) ++count;
  }
  return count;
}

bool is_feasible(const MecInstance& x, std::span<const Vertex> vertices) {
  return induced_edge_count(x.graph, vertices) >= x.k;
}

}  // namespace paramx
