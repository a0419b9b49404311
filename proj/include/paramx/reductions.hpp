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

#ifndef PARAMX_REDUCTIONS_HPP_
#define PARAMX_REDUCTIONS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paramx/instance.hpp"
#include "paramx/oracle.hpp"

namespace paramx {

// Universe B = {0..universe_size-1} and subsets C_0..C_{m-1} stored as bit
// rows. It is an (m, l)-system when no collection of at most l sets drawn
// from {C_i} and their complements covers B unless it contains some C_i
// together with its complement.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(int l, std::int64_t universe_size, const std::vector<std::vector<std::int64_t>>& members);

  [[nodiscard]] int m() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int l() const { return l_; }
  [[nodiscard]] std::int64_t universe_size() const { return universe_size_; }
  [[nodiscard]] bool contains(int set, std::int64_t element) const {
    return (rows_[set][element / 64] >> (element % 64)) & 1;
  }
  [[nodiscard]] const std::vector<std::uint64_t>& row(int set) const { return rows_[set]; }

  static SetSystem from_rows(int l, std::int64_t universe_size,
                             std::vector<std::vector<std::uint64_t>> rows);

 private:
  int l_ = 0;
  std::int64_t universe_size_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct SetSystemCheck {
  bool valid = false;
  // On failure: a covering collection without a complementary pair, as
  // (set index, complemented) entries.
  std::vector<std::pair<int, bool>> witness;
  std::int64_t collections_checked = 0;
};

// Exhaustive check over every collection of 1..l sets with no
// complementary pair.
SetSystemCheck verify_set_system(const SetSystem& sys);

struct SetSystemConfig {
  double universe_factor = 4.0;  // |B| = ceil(factor * 2^(2l) * m^2)
  int retry_cap = 16;
  int max_m = 8;
  int max_l = 3;
};

struct CertifiedSetSystem {
  SetSystem system;
  SetSystemCheck certificate;
  int attempts = 0;
};

// Random rows (each element joins each C_i with probability 1/2), verified
// exhaustively and redrawn until valid. Throws Error{kConstructionFailed}
// after cfg.retry_cap attempts and Error{kInput} outside the size caps.
CertifiedSetSystem build_set_system(int m, int l, std::uint64_t seed,
                                    const SetSystemConfig& cfg = {});

// Set index of S_{w,label}. Left vertices come first, then right ones.
int label_set_index(const ProjectionGame& game, bool right_side, int vertex, int label);

// Universe E x B (element e*|B| + b). For right vertex v and label x,
// S_{v,x} = U_{e at v} {e} x C_x; for left vertex u and label y,
// S_{u,y} = U_{e at u} {e} x complement(C_{pi_e(y)}). Requires
// sys.m() == game.alphabet.
SetCoverInstance projgame_to_setcover(const ProjectionGame& game, const SetSystem& sys);

struct CoverCheck {
  std::vector<int> sets;  // chosen set indices
  bool covers = false;
  std::vector<std::int64_t> uncovered;
};

// Picks S_{w, labeling[w]} for every vertex (labeling lists left vertices,
// then right ones) and reports what it leaves uncovered.
CoverCheck labeling_to_cover(const ProjectionGame& game, const SetSystem& sys,
                             const std::vector<int>& labeling);

// Fraction of edges a labeling satisfies.
double satisfied_fraction(const ProjectionGame& game, const std::vector<int>& labeling);

// Max-marginal-coverage greedy, ties to the lowest index. Throws
// Error{kInfeasible} listing the uncoverable elements.
std::vector<int> greedy_set_cover(const SetCoverInstance& x);

bool is_cover(const SetCoverInstance& x, const std::vector<int>& chosen);

struct ScssToDsf {
  DsfInstance instance;
  std::int64_t parameter_shift = 0;  // p -> p + 2l
  int terminals = 0;                 // l
};

// Adds r_i (vertex n+i) and s_i (vertex n+l+i) with edges r_i->t_i and
// t_i->s_i, then asks for every pair (r_i, s_j), i != j.
ScssToDsf scss_to_dsf(const ScssInstance& x);

// Drops the added edges from a solution of the image.
EdgeSet dsf_solution_to_scss(const ScssToDsf& reduction, const EdgeSet& dsf_edges,
                             int original_edges);

struct MccToMec {
  MecInstance instance;
  std::vector<std::string> warnings;  // improper coloring or color count != p
};

// Same graph, k = C(p, 2), target size p. Throws Error{kInput} if p < 2.
MccToMec mcc_to_mec(const MccInstance& x);

// Diagnostic only: compares the oracle minimum cover against the
// l/8 * (|V1| + |V2|) threshold for a small game.
struct SoundnessDiagnostic {
  double max_satisfiable_fraction = 0;
  double gap_premise = 0;  // 2 / l^2
  bool premise_holds = false;
  std::int64_t min_cover = 0;
  double threshold = 0;  // l/8 * (|V1| + |V2|)
  bool regular = false;
};

SoundnessDiagnostic soundness_diagnostic(const ProjectionGame& game, const SetSystem& sys,
                                         const OracleBudget& budget = {});

}  // namespace paramx

#endif  // PARAMX_REDUCTIONS_HPP_
