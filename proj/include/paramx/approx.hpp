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

#ifndef PARAMX_APPROX_HPP_
#define PARAMX_APPROX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paramx/dst.hpp"
#include "paramx/instance.hpp"

namespace paramx {

// One sub-solver call feeding a union solution.
struct Subcall {
  std::string label;  // e.g. "dst-greedy out of 0", "flow 2->5 d=2"
  EdgeSet edges;
  Weight cost = 0;
};

struct ApproxOutcome {
  Solution solution;
  std::string claimed_bound;  // the guarantee, instantiated with measured values
  std::vector<Subcall> subcalls;
  std::string diagnosis;  // why a Reject happened, empty otherwise
};

struct ApproxConfig {
  RecursiveGreedyConfig greedy;
  bool try_all_hubs = false;  // SCSS: try every terminal as hub, keep the cheapest union
  std::optional<std::uint64_t> mec_seed;  // MEC: random k edges instead of the first k
  int dst_terminal_cap = kDefaultDstTerminalCap;
};

// Out-arborescence from the hub plus in-arborescence into it (recursive
// greedy on G and on the reversed graph). Throws Error{kInfeasible} when
// the terminals are not mutually reachable.
ApproxOutcome scss_poly(const ScssInstance& x, const ApproxConfig& cfg = {});

// Same union built from exact DST optima. Accepts iff the union costs at
// most 2p; otherwise (or when infeasible) returns Reject with a diagnosis.
ApproxOutcome scss_fpt(const ScssInstance& x, std::int64_t p, const ApproxConfig& cfg = {});

// Union of one recursive-greedy DST per distinct source over its sinks.
ApproxOutcome dsf_approx(const DsfInstance& x, const ApproxConfig& cfg = {});

// Union of per-pair min-cost d-disjoint-path supports.
ApproxOutcome dsn_approx(const DsnInstance& x, const ApproxConfig& cfg = {});

// Endpoints of k edges: the lexicographically first k (as unordered pairs),
// or k random ones when cfg.mec_seed is set.
ApproxOutcome mec_approx(const MecInstance& x, const ApproxConfig& cfg = {});

}  // namespace paramx

#endif  // PARAMX_APPROX_HPP_
