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

#ifndef PARAMX_INSTANCE_HPP_
#define PARAMX_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paramx/graph.hpp"

namespace paramx {

// Directed Steiner Tree: a root and the terminals it must reach. The root
// may itself be listed as a terminal.
struct DstInstance {
  DiGraph graph;
  Vertex root = 0;
  std::vector<Vertex> terminals;

  friend bool operator==(const DstInstance&, const DstInstance&) = default;
};

// Strongly Connected Steiner Subgraph. `terminals` keeps input order; the
// first entry is the default hub of the two-arborescence algorithms.
struct ScssInstance {
  DiGraph graph;
  std::vector<Vertex> terminals;
  std::optional<std::int64_t> parameter;

  friend bool operator==(const ScssInstance&, const ScssInstance&) = default;
};

struct TerminalPair {
  Vertex source = 0;
  Vertex sink = 0;

  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

// Directed Steiner Forest.
struct DsfInstance {
  DiGraph graph;
  std::vector<TerminalPair> pairs;

  friend bool operator==(const DsfInstance&, const DsfInstance&) = default;
};

struct DemandPair {
  Vertex source = 0;
  Vertex sink = 0;
  int demand = 1;

  friend bool operator==(const DemandPair&, const DemandPair&) = default;
};

// Directed Steiner Network: each pair needs `demand` edge-disjoint paths.
struct DsnInstance {
  DiGraph graph;
  std::vector<DemandPair> pairs;

  friend bool operator==(const DsnInstance&, const DsnInstance&) = default;
};

// Minimum Edge Cover: smallest vertex set inducing at least `k` edges. The
// graph is read as undirected: edge (u, v) is the unordered pair {u, v}, and
// (v, u) may not also be present.
struct MecInstance {
  DiGraph graph;
  std::int64_t k = 1;
  std::optional<std::int64_t> target_size;

  friend bool operator==(const MecInstance&, const MecInstance&) = default;
};

// Multicolored Clique source instance (undirected reading as for MEC).
struct MccInstance {
  DiGraph graph;
  std::vector<int> colors;
  int p = 1;

  friend bool operator==(const MccInstance&, const MccInstance&) = default;
};

// Universe is 0..universe_size-1. Labels are optional provenance names.
struct SetCoverInstance {
  std::int64_t universe_size = 0;
  std::vector<std::vector<std::int64_t>> sets;
  std::vector<std::string> labels;

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

// Bipartite constraint graph between left (0..left-1) and right
// (0..right-1) vertices. projection[e][y] is the right label forced by left
// label y across edge e.
struct ProjectionGame {
  int left = 0;
  int right = 0;
  int alphabet = 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> projection;

  friend bool operator==(const ProjectionGame&, const ProjectionGame&) = default;
};

using Instance = std::variant<DstInstance, ScssInstance, DsfInstance, DsnInstance,
                              MecInstance, MccInstance, SetCoverInstance,
                              ProjectionGame>;

// File-format tag: "dst", "scss", "dsf", "dsn", "mec", "mcc", "setcover",
// "projgame".
std::string_view kind_name(const Instance& instance);

// Invariant checks. Each throws Error{kInput} naming the offending field.
void validate(const DstInstance& x);
void validate(const ScssInstance& x);
void validate(const DsfInstance& x);
void validate(const DsnInstance& x);
void validate(const MecInstance& x);
void validate(const MccInstance& x);
void validate(const SetCoverInstance& x);
void validate(const ProjectionGame& x);
void validate(const Instance& x);

// Result of any solver. Reject is the normalized "no certified answer"
// value; it carries no items.
struct Solution {
  enum class Kind { kEdgeSet, kVertexSet, kSetCollection, kReject };

  Kind kind = Kind::kReject;
  std::vector<int> items;  // sorted edge ids, vertex ids or set indices
  std::int64_t cost = 0;
  std::string producer;

  [[nodiscard]] bool rejected() const { return kind == Kind::kReject; }

  static Solution edge_set(const DiGraph& g, EdgeSet edges, std::string producer);
  static Solution vertex_set(std::vector<Vertex> vertices, std::string producer);
  static Solution set_collection(std::vector<int> sets, std::string producer);
  static Solution reject(std::string producer);
};

// Feasibility predicates, straight from the problem definitions.
bool is_feasible(const DstInstance& x, std::span<const EdgeId> edges);
bool is_feasible(const ScssInstance& x, std::span<const EdgeId> edges);
bool is_feasible(const DsfInstance& x, std::span<const EdgeId> edges);
bool is_feasible(const DsnInstance& x, std::span<const EdgeId> edges);
bool is_feasible(const MecInstance& x, std::span<const Vertex> vertices);

// Number of graph edges with both endpoints in `vertices`.
std::int64_t induced_edge_count(const DiGraph& g, std::span<const Vertex> vertices);

}  // namespace paramx

#endif  // PARAMX_INSTANCE_HPP_
