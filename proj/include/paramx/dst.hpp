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

#ifndef PARAMX_DST_HPP_
#define PARAMX_DST_HPP_

#include <cstdint>
#include <vector>

#include "paramx/graph.hpp"
#include "paramx/instance.hpp"

namespace paramx {

inline constexpr int kDefaultDstTerminalCap = 12;

// cost(v, S): cheapest arborescence rooted at v reaching every terminal in
// the subset S (bit i = i-th non-root terminal). Unreachable entries hold
// kUnreachable.
class DstExactTable {
 public:
  DstExactTable(const DiGraph& g, std::vector<Vertex> terminals);

  [[nodiscard]] int num_terminals() const { return static_cast<int>(terminals_.size()); }
  [[nodiscard]] const std::vector<Vertex>& terminals() const { return terminals_; }
  [[nodiscard]] Weight cost(Vertex v, std::uint32_t subset) const {
    return cost_[index(subset, v)];
  }
  // Edges of an optimal arborescence for (v, subset); empty if unreachable.
  [[nodiscard]] EdgeSet reconstruct(Vertex v, std::uint32_t subset) const;

 private:
  // How cost(v, S) was reached: either a shortest path v->via then the
  // tree at `via`, or a split of S at v itself into `part` and S \ part.
  struct Step {
    Vertex via = -1;
    std::uint32_t part = 0;
  };

  [[nodiscard]] std::size_t index(std::uint32_t subset, Vertex v) const {
    return static_cast<std::size_t>(subset) * n_ + v;
  }
  void collect(Vertex v, std::uint32_t subset, std::vector<EdgeId>& out) const;

  int n_;
  std::vector<Vertex> terminals_;
  ShortestPaths paths_;
  std::vector<Weight> cost_;
  std::vector<Step> step_;
};

// Exact minimum-cost Steiner arborescence. Throws Error{kRefused} above
// `terminal_cap` terminals and Error{kInfeasible} if a terminal is
// unreachable from the root.
Solution dst_exact(const DstInstance& x, int terminal_cap = kDefaultDstTerminalCap);

struct RecursiveGreedyConfig {
  int levels = 2;  // recursion depth i >= 1; level 1 is plain shortest paths
};

// Recursive greedy: at level i, repeatedly add the lowest-density partial
// tree obtained from (path root->v) + level i-1 tree at v covering j more
// terminals. Density is cost / newly covered terminals. Ties prefer the
// lower v, then the lexicographically smaller edge set.
Solution dst_recursive_greedy(const DstInstance& x, const RecursiveGreedyConfig& cfg = {});

}  // namespace paramx

#endif  // PARAMX_DST_HPP_
