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

#ifndef PARAMX_ORACLE_HPP_
#define PARAMX_ORACLE_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "paramx/instance.hpp"

namespace paramx {

// Limits for the brute-force solvers. Exceeding any of them raises
// Error{kRefused}; the oracles never fall back to approximation.
struct OracleBudget {
  int max_edges_for_subset_enum = 20;
  int max_sets_for_cover_enum = 20;
  int max_vertices_for_mec_enum = 20;
  double time_cap_seconds = 60.0;

  // Reads PARAMX_ORACLE_BUDGET, e.g. "edges=24,sets=20,vertices=20,time=30".
  static OracleBudget from_env();
};

// Applies "key=value,..." overrides to `base`. Throws Error{kInput}.
OracleBudget parse_budget(std::string_view spec, OracleBudget base = {});

struct OracleResult {
  bool feasible = false;
  Solution solution;  // meaningful only when feasible
  std::int64_t opt = 0;
};

// Minimum-cost feasible edge subset. Subsets are visited by cardinality,
// then lexicographically by sorted edge index; the answer is the first
// subset of minimum cost (ties: fewer edges, then lexicographic).
OracleResult opt_edge_subset(const DstInstance& x, const OracleBudget& budget = {});
OracleResult opt_edge_subset(const ScssInstance& x, const OracleBudget& budget = {});
OracleResult opt_edge_subset(const DsfInstance& x, const OracleBudget& budget = {});
OracleResult opt_edge_subset(const DsnInstance& x, const OracleBudget& budget = {});

// Smallest vertex set inducing at least k edges.
OracleResult opt_vertex_subset_mec(const MecInstance& x, const OracleBudget& budget = {});

struct CoverResult {
  bool feasible = false;
  std::vector<int> cover;  // set indices, increasing
  std::int64_t opt = 0;
};

// Minimum-cardinality cover by increasing-size enumeration.
CoverResult opt_set_cover(const SetCoverInstance& x, const OracleBudget& budget = {});

// True when the graph has a clique of size p using p distinct colors.
bool has_multicolored_clique(const MccInstance& x);

}  // namespace paramx

#endif  // PARAMX_ORACLE_HPP_
