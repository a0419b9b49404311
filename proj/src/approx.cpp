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

#include "paramx/approx.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "paramx/error.hpp"
#include "paramx/flow.hpp"
#include "paramx/generate.hpp"

namespace paramx {
namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

using DstSolver = std::function<Solution(const DstInstance&)>;

struct HubUnion {
  EdgeSet edges;
  std::vector<Subcall> subcalls;
  Weight out_cost = 0;
  Weight in_cost = 0;
};

// Empty string when every terminal reaches and is reached by the hub.
std::string scss_infeasibility(const ScssInstance& x, const DiGraph& rev, Vertex hub) {
  std::vector<Vertex> out = reachable(x.graph, hub);
  std::vector<Vertex> in = reachable(rev, hub);
  for (Vertex t : x.terminals) {
    if (!std::binary_search(out.begin(), out.end(), t)) {
      return "terminal " + str(t) + " is unreachable from terminal " + str(hub);
    }
    if (!std::binary_search(in.begin(), in.end(), t)) {
      return "terminal " + str(hub) + " is unreachable from terminal " + str(t);
    }
  }
  return {};
}

HubUnion union_for_hub(const ScssInstance& x, const DiGraph& rev, Vertex hub,
                       const DstSolver& solve, const std::string& name) {
  std::vector<Vertex> others;
  for (Vertex t : x.terminals) {
    if (t != hub) others.push_back(t);
  }
  Solution out = solve(DstInstance{x.graph, hub, others});
  Solution in = solve(DstInstance{rev, hub, others});  // edge ids match x.graph
  HubUnion u;
  u.edges = edge_union(out.items, in.items);
  u.out_cost = out.cost;
  u.in_cost = in.cost;
  u.subcalls.push_back({name + " out of " + str(hub), out.items, out.cost});
  u.subcalls.push_back({name + " into " + str(hub) + " (reversed graph)", in.items, in.cost});
  return u;
}

// Picks the cheapest hub union; ties keep the earlier terminal.
HubUnion best_union(const ScssInstance& x, const DiGraph& rev, bool all_hubs,
                    const DstSolver& solve, const std::string& name) {
  std::optional<HubUnion> best;
  const std::size_t hubs = all_hubs ? x.terminals.size() : 1;
  for (std::size_t i = 0; i < hubs; ++i) {
    HubUnion u = union_for_hub(x, rev, x.terminals[i], solve, name);
    if (!best || x.graph.cost(u.edges) < x.graph.cost(best->edges)) best = std::move(u);
  }
  return std::move(*best);
}

}  // namespace

ApproxOutcome scss_poly(const ScssInstance& x, const ApproxConfig& cfg) {
  validate(x);
  const DiGraph rev = reverse(x.graph);
  if (auto why = scss_infeasibility(x, rev, x.terminals.front()); !why.empty()) {
    fail(ErrorCode::kInfeasible, "scss: " + why);
  }
  HubUnion u = best_union(
      x, rev, cfg.try_all_hubs,
      [&](const DstInstance& d) { return dst_recursive_greedy(d, cfg.greedy); }, "dst-greedy");
  ApproxOutcome outcome;
  outcome.solution = Solution::edge_set(x.graph, u.edges, "scss-poly");
  outcome.subcalls = std::move(u.subcalls);
  outcome.claimed_bound = "cost <= |E1| + |E2| = " + str(u.out_cost + u.in_cost) +
                          " <= 2*|T|^eps*OPT with |T| = " + str(x.terminals.size()) +
                          ", levels = " + str(cfg.greedy.levels);
  return outcome;
}

ApproxOutcome scss_fpt(const ScssInstance& x, std::int64_t p, const ApproxConfig& cfg) {
  validate(x);
  const DiGraph rev = reverse(x.graph);
  ApproxOutcome outcome;
  const std::string threshold = "accept iff cost <= 2p = " + str(2 * p);
  if (auto why = scss_infeasibility(x, rev, x.terminals.front()); !why.empty()) {
    outcome.solution = Solution::reject("scss-fpt");
    outcome.diagnosis = "infeasible: " + why;
    outcome.claimed_bound = threshold;
    return outcome;
  }
  HubUnion u = best_union(
      x, rev, cfg.try_all_hubs,
      [&](const DstInstance& d) { return dst_exact(d, cfg.dst_terminal_cap); }, "dst-exact");
  const Weight cost = x.graph.cost(u.edges);
  outcome.subcalls = std::move(u.subcalls);
  outcome.claimed_bound = "cost <= OPT1 + OPT2 = " + str(u.out_cost) + " + " + str(u.in_cost) +
                          " <= 2*OPT; " + threshold;
  if (cost > 2 * p) {
    outcome.solution = Solution::reject("scss-fpt");
    outcome.diagnosis = "union cost " + str(cost) + " exceeds 2p = " + str(2 * p);
  } else {
    outcome.solution = Solution::edge_set(x.graph, std::move(u.edges), "scss-fpt");
  }
  return outcome;
}

ApproxOutcome dsf_approx(const DsfInstance& x, const ApproxConfig& cfg) {
  validate(x);
  std::vector<Vertex> sources;
  std::map<Vertex, std::vector<Vertex>> sinks;
  for (const auto& [s, t] : x.pairs) {
    std::vector<Vertex> reach = reachable(x.graph, s);
    if (!std::binary_search(reach.begin(), reach.end(), t)) {
      fail(ErrorCode::kInfeasible, "dsf: pair (" + str(s) + "," + str(t) + ") is not connected");
    }
    if (!sinks.contains(s)) sources.push_back(s);
    sinks[s].push_back(t);
  }
  ApproxOutcome outcome;
  EdgeSet all;
  std::size_t widest = 0;
  for (Vertex s : sources) {
    Solution tree = dst_recursive_greedy(DstInstance{x.graph, s, sinks[s]}, cfg.greedy);
    outcome.subcalls.push_back({"dst-greedy from " + str(s) + " to " + str(sinks[s].size()) +
                                    " sinks",
                                tree.items, tree.cost});
    all = edge_union(all, tree.items);
    widest = std::max(widest, sinks[s].size());
  }
  outcome.solution = Solution::edge_set(x.graph, std::move(all), "dsf");
  outcome.claimed_bound = "cost <= sum_v |T_v|^eps*OPT_v <= |S|*OPT^(1+eps) with |S| = " +
                          str(sources.size()) + ", max |T_v| = " + str(widest);
  return outcome;
}

ApproxOutcome dsn_approx(const DsnInstance& x, const ApproxConfig& /*cfg*/) {
  validate(x);
  ApproxOutcome outcome;
  EdgeSet all;
  Weight sum = 0;
  for (const DemandPair& p : x.pairs) {
    DisjointPathsResult flow = min_cost_disjoint_paths(x.graph, p.source, p.sink, p.demand);
    if (!flow.feasible) {
      fail(ErrorCode::kInfeasible, "dsn: pair (" + str(p.source) + "," + str(p.sink) +
                                       ") supports only " + str(flow.achieved) +
                                       " disjoint paths, demand " + str(p.demand));
    }
    outcome.subcalls.push_back({"flow " + str(p.source) + "->" + str(p.sink) +
                                    " d=" + str(p.demand),
                                flow.edges, flow.cost});
    all = edge_union(all, flow.edges);
    sum += flow.cost;
  }
  for (const DemandPair& p : x.pairs) {
    if (!min_cost_disjoint_paths(x.graph, all, p.source, p.sink, p.demand).feasible) {
      throw std::logic_error("dsn: union lost a demand");
    }
  }
  outcome.solution = Solution::edge_set(x.graph, std::move(all), "dsn");
  outcome.claimed_bound = "cost <= sum |E_vx| = " + str(sum) +
                          " with each |E_vx| <= OPT; ratio <= #pairs = " + str(x.pairs.size());
  return outcome;
}

ApproxOutcome mec_approx(const MecInstance& x, const ApproxConfig& cfg) {
  validate(x);
  const int m = x.graph.num_edges();
  if (m < x.k) {
    fail(ErrorCode::kInfeasible, "mec: graph has " + str(m) + " edges, fewer than k = " + str(x.k));
  }
  std::vector<EdgeId> chosen;
  if (cfg.mec_seed) {
    Rng rng(*cfg.mec_seed);
    chosen = rng.sample(m, static_cast<int>(x.k));
  } else {
    std::vector<std::pair<std::pair<Vertex, Vertex>, EdgeId>> keyed;
    for (EdgeId id = 0; id < m; ++id) {
      const Edge& e = x.graph.edge(id);
      keyed.push_back({{std::min(e.tail, e.head), std::max(e.tail, e.head)}, id});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::int64_t i = 0; i < x.k; ++i) chosen.push_back(keyed[i].second);
  }
  std::vector<Vertex> endpoints;
  for (EdgeId id : chosen) {
    endpoints.push_back(x.graph.edge(id).tail);
    endpoints.push_back(x.graph.edge(id).head);
  }
  ApproxOutcome outcome;
  outcome.solution = Solution::vertex_set(std::move(endpoints), cfg.mec_seed ? "mec(random)" : "mec");
  outcome.subcalls.push_back({"picked edges", make_edge_set(chosen), static_cast<Weight>(chosen.size())});
  outcome.claimed_bound = "|S| = " + str(outcome.solution.cost) + " <= 2k = " + str(2 * x.k) +
                          " <= OPT*(OPT-1)";
  return outcome;
}

}  // namespace paramx
