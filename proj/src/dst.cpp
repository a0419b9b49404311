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

#include "paramx/dst.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "paramx/error.hpp"

namespace paramx {
namespace {

std::vector<Vertex> non_root_terminals(const DstInstance& x) {
  std::vector<Vertex> out;
  for (Vertex t : x.terminals) {
    if (t != x.root && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

void require_reachable(const ShortestPaths& paths, Vertex root, const std::vector<Vertex>& terminals) {
  for (Vertex t : terminals) {
    if (!paths.reachable(root, t)) {
      fail(ErrorCode::kInfeasible, "terminal " + std::to_string(t) +
                                       " is unreachable from root " + std::to_string(root));
    }
  }
}

}  // namespace

DstExactTable::DstExactTable(const DiGraph& g, std::vector<Vertex> terminals)
    : n_(g.num_vertices()), terminals_(std::move(terminals)), paths_(g) {
  const int k = num_terminals();
  if (k > 30) fail(ErrorCode::kRefused, "too many terminals for the subset table");
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  cost_.assign(static_cast<std::size_t>(full + 1) * n_, kUnreachable);
  step_.assign(cost_.size(), Step{});
  for (Vertex v = 0; v < n_; ++v) cost_[index(0, v)] = 0;

  std::vector<Weight> at(n_);
  std::vector<std::uint32_t> part(n_);
  for (std::uint32_t s = 1; s <= full; ++s) {
    // Tree rooted exactly at u: a leaf (u is the only terminal) or a split
    // of s at u. Halves keep the lowest terminal on the `sub` side.
    std::fill(at.begin(), at.end(), kUnreachable);
    std::fill(part.begin(), part.end(), 0);
    if (std::has_single_bit(s)) {
      at[terminals_[std::countr_zero(s)]] = 0;
    } else {
      const std::uint32_t low = s & (~s + 1);
      for (std::uint32_t sub = (s - 1) & s; sub > 0; sub = (sub - 1) & s) {
        if (!(sub & low)) continue;
        for (Vertex u = 0; u < n_; ++u) {
          Weight c = cost_[index(sub, u)] + cost_[index(s ^ sub, u)];
          if (c < at[u]) {
            at[u] = c;
            part[u] = sub;
          }
        }
      }
    }
    // Then walk a shortest path to where the tree starts, preferring no walk.
    for (Vertex v = 0; v < n_; ++v) {
      Weight best = at[v];
      Step step{-1, part[v]};
      for (Vertex u = 0; u < n_; ++u) {
        if (u == v || at[u] >= kUnreachable || !paths_.reachable(v, u)) continue;
        Weight c = paths_.distance(v, u) + at[u];
        if (c < best) {
          best = c;
          step = {u, part[u]};
        }
      }
      cost_[index(s, v)] = std::min(best, kUnreachable);
      step_[index(s, v)] = step;
    }
  }
}

void DstExactTable::collect(Vertex v, std::uint32_t subset, std::vector<EdgeId>& out) const {
  if (subset == 0) return;
  const Step& step = step_[index(subset, v)];
  Vertex node = v;
  if (step.via >= 0) {
    for (EdgeId id : paths_.path(v, step.via)) out.push_back(id);
    node = step.via;
  }
  if (step.part == 0) return;  // leaf: node is the single terminal
  collect(node, step.part, out);
  collect(node, subset ^ step.part, out);
}

EdgeSet DstExactTable::reconstruct(Vertex v, std::uint32_t subset) const {
  if (cost(v, subset) >= kUnreachable) return {};
  std::vector<EdgeId> out;
  collect(v, subset, out);
  return make_edge_set(std::move(out));
}

Solution dst_exact(const DstInstance& x, int terminal_cap) {
  std::vector<Vertex> terminals = non_root_terminals(x);
  if (static_cast<int>(terminals.size()) > terminal_cap) {
    fail(ErrorCode::kRefused, "dst_exact refused: " + std::to_string(terminals.size()) +
                                  " terminals exceeds cap of " + std::to_string(terminal_cap));
  }
  DstExactTable table(x.graph, terminals);
  const std::uint32_t full = (std::uint32_t{1} << terminals.size()) - 1;
  if (table.cost(x.root, full) >= kUnreachable) {
    require_reachable(ShortestPaths(x.graph), x.root, terminals);
  }
  return Solution::edge_set(x.graph, table.reconstruct(x.root, full), "dst-exact");
}

namespace {

struct Partial {
  EdgeSet edges;
  Weight cost = 0;
  std::vector<Vertex> covered;  // subset of the live terminal list, sorted
};

class RecursiveGreedy {
 public:
  explicit RecursiveGreedy(const DiGraph& g) : g_(g), paths_(g) {}

  const ShortestPaths& paths() const { return paths_; }

  // Tree rooted at r covering (up to) k terminals of `live`, a sorted list.
  Partial solve(int level, Vertex r, int k, const std::vector<Vertex>& live) const {
    if (level <= 1) return nearest(r, k, live);
    Partial tree;
    std::vector<Vertex> remaining = live;
    int need = k;
    while (need > 0 && !remaining.empty()) {
      bool found = false;
      Vertex best_v = -1;
      Partial best;
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (!paths_.reachable(r, v)) continue;
        for (int j = 1; j <= need; ++j) {
          Partial sub = solve(level - 1, v, j, remaining);
          if (sub.covered.empty()) continue;
          std::vector<EdgeId> edges = paths_.path(r, v);
          edges.insert(edges.end(), sub.edges.begin(), sub.edges.end());
          Partial cand = finish(make_edge_set(std::move(edges)), r, remaining);
          if (!found || denser(cand, best) || (same_density(cand, best) && v == best_v && cand.edges < best.edges)) {
            found = true;
            best_v = v;
            best = std::move(cand);
          }
        }
      }
      if (!found) break;
      tree.edges = edge_union(tree.edges, best.edges);
      std::vector<Vertex> rest;
      std::set_difference(remaining.begin(), remaining.end(), best.covered.begin(),
                          best.covered.end(), std::back_inserter(rest));
      remaining = std::move(rest);
      need -= static_cast<int>(best.covered.size());
    }
    return finish(std::move(tree.edges), r, live);
  }

 private:
  // Level 1: union of shortest paths to the k nearest live terminals.
  Partial nearest(Vertex r, int k, const std::vector<Vertex>& live) const {
    std::vector<Vertex> order;
    for (Vertex t : live) {
      if (paths_.reachable(r, t)) order.push_back(t);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return paths_.distance(r, a) < paths_.distance(r, b);
    });
    if (static_cast<int>(order.size()) > k) order.resize(k);
    std::vector<EdgeId> edges;
    for (Vertex t : order) {
      for (EdgeId id : paths_.path(r, t)) edges.push_back(id);
    }
    Partial p = finish(make_edge_set(std::move(edges)), r, live);
    return p;
  }

  // Fills cost and the live terminals spanned by the edge set (plus r).
  Partial finish(EdgeSet edges, Vertex r, const std::vector<Vertex>& live) const {
    Partial p;
    p.cost = g_.cost(edges);
    std::vector<Vertex> touched{r};
    for (EdgeId id : edges) touched.push_back(g_.edge(id).head);
    std::sort(touched.begin(), touched.end());
    std::set_intersection(live.begin(), live.end(), touched.begin(), touched.end(),
                          std::back_inserter(p.covered));
    p.covered.erase(std::unique(p.covered.begin(), p.covered.end()), p.covered.end());
    p.edges = std::move(edges);
    return p;
  }

  // a.cost / |a.covered| < b.cost / |b.covered|, exactly.
  static bool denser(const Partial& a, const Partial& b) {
    return a.cost * static_cast<Weight>(b.covered.size()) <
           b.cost * static_cast<Weight>(a.covered.size());
  }
  static bool same_density(const Partial& a, const Partial& b) {
    return a.cost * static_cast<Weight>(b.covered.size()) ==
           b.cost * static_cast<Weight>(a.covered.size());
  }

  const DiGraph& g_;
  ShortestPaths paths_;
};

}  // namespace

Solution dst_recursive_greedy(const DstInstance& x, const RecursiveGreedyConfig& cfg) {
  if (cfg.levels < 1) fail(ErrorCode::kInput, "recursive greedy needs levels >= 1");
  std::vector<Vertex> terminals = non_root_terminals(x);
  std::sort(terminals.begin(), terminals.end());
  RecursiveGreedy greedy(x.graph);
  require_reachable(greedy.paths(), x.root, terminals);
  Partial tree = greedy.solve(cfg.levels, x.root, static_cast<int>(terminals.size()), terminals);
  return Solution::edge_set(x.graph, std::move(tree.edges),
                            "dst-greedy(i=" + std::to_string(cfg.levels) + ")");
}

}  // namespace paramx
