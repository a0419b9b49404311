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

#ifndef PARAMX_FLOW_HPP_
#define PARAMX_FLOW_HPP_

#include <vector>

#include "paramx/graph.hpp"

namespace paramx {

// Result of a unit-capacity min-cost flow from s to t.
struct DisjointPathsResult {
  bool feasible = false;  // reached the requested flow value
  int achieved = 0;       // flow value reached (max-flow if infeasible)
  EdgeSet edges;          // support of the flow
  Weight cost = 0;
  std::vector<int> edge_flow;  // 0/1 per original edge
};

// Minimum-weight edge set carrying `demand` edge-disjoint s->t paths, by
// successive shortest augmenting paths with Johnson potentials. Every
// original edge has capacity 1 and cost equal to its weight. Throws
// Error{kInput} if s == t, demand < 1 or an id is out of range.
DisjointPathsResult min_cost_disjoint_paths(const DiGraph& g, Vertex s, Vertex t, int demand);

// Same, restricted to a subset of the edges of g.
DisjointPathsResult min_cost_disjoint_paths(const DiGraph& g, std::span<const EdgeId> allowed,
                                            Vertex s, Vertex t, int demand);

// Splits an edge set into edge-disjoint s->t walks by repeated path
// extraction. Returns as many as can be peeled off; each path is a list of
// edge ids in walk order.
std::vector<std::vector<EdgeId>> decompose_paths(const DiGraph& g, const EdgeSet& edges, Vertex s,
                                                 Vertex t);

}  // namespace paramx

#endif  // PARAMX_FLOW_HPP_
