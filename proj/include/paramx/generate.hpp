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

#ifndef PARAMX_GENERATE_HPP_
#define PARAMX_GENERATE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "paramx/instance.hpp"

namespace paramx {

enum class Family { kRandomGnp, kLayeredDag, kBidirectedRing, kCliqueLike };

enum class ProblemKind { kDst, kScss, kDsf, kDsn, kMec, kMcc, kSetCover, kProjGame };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);
std::optional<ProblemKind> kind_from_name(std::string_view name);
std::string_view kind_name(ProblemKind kind);

struct GenParams {
  ProblemKind kind = ProblemKind::kScss;
  int n = 6;
  double edge_prob = 0.3;
  int terminals = 3;   // DST/SCSS terminals, clique size for clique_like; <= 0 means all
  int pairs = 2;       // DSF/DSN
  int max_demand = 1;  // DSN demands drawn from 1..max_demand (at most 2)
  std::int64_t k = 0;  // MEC edge target; 0 draws one from 1..#edges
  int layers = 3;      // layered_dag
  int max_edges = 0;   // cap on background edges; planted edges always kept; 0 = none
  int max_weight = 1;  // weights drawn from 1..max_weight
  int colors = 3;      // MCC p
  int universe = 8;    // set cover
  int sets = 6;
  int left = 2;        // projection game
  int right = 2;
  int alphabet = 2;
  bool satisfiable = true;
};

struct Generated {
  Instance instance;
  // Cost of the planted feasible structure, an upper bound on OPT.
  std::optional<Weight> planted_cost;
  // Satisfying labeling planted into a projection game (left then right).
  std::vector<int> planted_labeling;
};

// Deterministic for fixed (family, params, seed). Throws Error{kInput} for an
// infeasible parameter combination.
Generated generate(Family family, const GenParams& params, std::uint64_t seed);

// Portable draws on top of mt19937_64 (the standard distributions are
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
  bool coin(double probability);
  // `count` distinct values from [0, n) in draw order.
  std::vector<int> sample(int n, int count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace paramx

#endif  // PARAMX_GENERATE_HPP_
