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

#include "paramx/reductions.hpp"

#include <gtest/gtest.h>

#include "paramx/error.hpp"
#include "paramx/generate.hpp"
#include "paramx/oracle.hpp"

namespace paramx {
namespace {

ProjectionGame identity_game(int left, int right, int sigma) {
  ProjectionGame g;
  g.left = left;
  g.right = right;
  g.alphabet = sigma;
  for (int a = 0; a < left; ++a) {
    for (int b = 0; b < right; ++b) {
      g.edges.emplace_back(a, b);
      std::vector<int> table(sigma);
      for (int y = 0; y < sigma; ++y) table[y] = y;
      g.projection.push_back(table);
    }
  }
  return g;
}

TEST(SetSystem, HandExampleIsValid) {
  SetSystem sys(1, 2, {{0}});
  SetSystemCheck c = verify_set_system(sys);
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.collections_checked, 2);
}

TEST(SetSystem, FullSetIsRejected) {
  SetSystem fake(1, 4, {{0, 1, 2, 3}});
  SetSystemCheck c = verify_set_system(fake);
  EXPECT_FALSE(c.valid);
  ASSERT_EQ(c.witness.size(), 1u);
  EXPECT_EQ(c.witness.front(), (std::pair<int, bool>{0, false}));
}

TEST(SetSystem, SetPlusOtherComplementCanCover) {
  // C1 = {0}, C2 = {0}: C1 with complement(C2) covers B at l = 2.
  SetSystem fake(2, 2, {{0}, {0}});
  EXPECT_FALSE(verify_set_system(fake).valid);
  EXPECT_TRUE(verify_set_system(SetSystem(1, 2, {{0}, {0}})).valid);
}

TEST(SetSystem, BuildsAcrossTheRange) {
  for (int l = 1; l <= 2; ++l) {
    for (int m = 1; m <= 4; ++m) {
      CertifiedSetSystem s = build_set_system(m, l, 17);
      EXPECT_TRUE(s.certificate.valid);
      EXPECT_EQ(s.system.m(), m);
      EXPECT_LE(s.attempts, 16);
      EXPECT_EQ(s.system.universe_size(), 4 * (1 << (2 * l)) * m * m);
      EXPECT_TRUE(verify_set_system(s.system).valid);
    }
  }
  EXPECT_THROW(build_set_system(9, 3, 0), Error);
  EXPECT_THROW(build_set_system(0, 1, 0), Error);
}

TEST(SetSystem, RetryCapIsEnforced) {
  SetSystemConfig cfg;
  cfg.universe_factor = 0.25;  // |B| = 1 for m = l = 1: every draw fails
  cfg.retry_cap = 3;
  try {
    build_set_system(1, 1, 0, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConstructionFailed);
  }
}

TEST(ProjGame, OneEdgeCounts) {
  ProjectionGame g = identity_game(1, 1, 2);
  CertifiedSetSystem sys = build_set_system(2, 1, 3);
  SetCoverInstance x = projgame_to_setcover(g, sys.system);
  EXPECT_EQ(x.sets.size(), 4u);
  EXPECT_EQ(x.universe_size, sys.system.universe_size());
  EXPECT_EQ(x.labels[label_set_index(g, false, 0, 1)], "S_{u0,1}");
  EXPECT_EQ(x.labels[label_set_index(g, true, 0, 0)], "S_{v0,0}");
}

TEST(ProjGame, AlphabetMustMatch) {
  ProjectionGame g = identity_game(1, 1, 2);
  EXPECT_THROW(projgame_to_setcover(g, build_set_system(3, 1, 0).system), Error);
}

TEST(ProjGame, EmptyGameHasEmptyUniverse) {
  ProjectionGame g;
  g.left = 1;
  g.right = 1;
  g.alphabet = 2;
  SetCoverInstance x = projgame_to_setcover(g, build_set_system(2, 1, 0).system);
  EXPECT_EQ(x.universe_size, 0);
  EXPECT_TRUE(is_cover(x, {}));
  EXPECT_EQ(opt_set_cover(x).opt, 0);
}

TEST(ProjGame, CompletenessOnIdentityGames) {
  for (int left = 1; left <= 2; ++left) {
    for (int sigma = 1; sigma <= 3; ++sigma) {
      ProjectionGame g = identity_game(left, 2, sigma);
      CertifiedSetSystem sys = build_set_system(sigma, 2, 11);
      std::vector<int> labeling(left + 2, sigma - 1);
      EXPECT_DOUBLE_EQ(satisfied_fraction(g, labeling), 1.0);
      CoverCheck c = labeling_to_cover(g, sys.system, labeling);
      EXPECT_TRUE(c.covers);
      EXPECT_EQ(c.sets.size(), static_cast<std::size_t>(left + 2));
      CoverResult opt = opt_set_cover(projgame_to_setcover(g, sys.system));
      EXPECT_LE(opt.opt, left + 2);
    }
  }
}

TEST(ProjGame, ViolatedEdgeLeavesAGap) {
  ProjectionGame g = identity_game(1, 1, 2);
  CertifiedSetSystem sys = build_set_system(2, 2, 5);
  CoverCheck c = labeling_to_cover(g, sys.system, {0, 1});
  EXPECT_FALSE(c.covers);
  EXPECT_FALSE(c.uncovered.empty());
  EXPECT_DOUBLE_EQ(satisfied_fraction(g, {0, 1}), 0.0);
  EXPECT_THROW(labeling_to_cover(g, sys.system, {0}), Error);
}

TEST(GreedyCover, Examples) {
  SetCoverInstance a{2, {{0}, {1}, {0, 1}}, {}};
  EXPECT_EQ(greedy_set_cover(a), std::vector<int>{2});
  SetCoverInstance b{3, {{0, 1}, {1, 2}, {2}}, {}};
  EXPECT_EQ(greedy_set_cover(b).size(), 2u);
  SetCoverInstance c{3, {{0, 1}}, {}};
  EXPECT_THROW(greedy_set_cover(c), Error);
}

TEST(ScssToDsf, Formulas) {
  ScssInstance tri{DiGraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}), {0, 1, 2}, {}};
  ScssToDsf r = scss_to_dsf(tri);
  EXPECT_EQ(r.instance.graph.num_vertices(), 3 + 6);
  EXPECT_EQ(r.instance.graph.num_edges(), 6 + 6);
  EXPECT_EQ(r.instance.pairs.size(), 6u);
  EXPECT_EQ(r.parameter_shift, 6);
  OracleResult image = opt_edge_subset(r.instance);
  EXPECT_EQ(image.opt, 9);
  EdgeSet back = dsf_solution_to_scss(r, image.solution.items, tri.graph.num_edges());
  EXPECT_TRUE(is_feasible(tri, back));
  EXPECT_EQ(tri.graph.cost(back), 3);

  ScssInstance two{DiGraph(2, {{0, 1}, {1, 0}}), {0, 1}, {}};
  ScssToDsf r2 = scss_to_dsf(two);
  EXPECT_EQ(r2.instance.pairs.size(), 2u);
  EXPECT_EQ(r2.parameter_shift, 4);
}

TEST(MccToMec, Formulas) {
  DiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  MccToMec r = mcc_to_mec(MccInstance{k4, {0, 1, 2, 3}, 4});
  EXPECT_EQ(r.instance.k, 6);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_EQ(opt_vertex_subset_mec(r.instance).opt, 4);
  DiGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(mcc_to_mec(MccInstance{path, {0, 1, 2}, 3}).instance.k, 3);
  EXPECT_EQ(mcc_to_mec(MccInstance{path, {0, 1, 0}, 2}).instance.k, 1);
  EXPECT_FALSE(mcc_to_mec(MccInstance{path, {0, 0, 1}, 2}).warnings.empty());
  EXPECT_THROW(mcc_to_mec(MccInstance{path, {0, 0, 0}, 1}), Error);
}

TEST(Soundness, DiagnosticOnSatisfiableGame) {
  ProjectionGame g = identity_game(1, 1, 2);
  CertifiedSetSystem sys = build_set_system(2, 2, 1);
  SoundnessDiagnostic d = soundness_diagnostic(g, sys.system);
  EXPECT_DOUBLE_EQ(d.max_satisfiable_fraction, 1.0);
  EXPECT_FALSE(d.premise_holds);
  EXPECT_EQ(d.min_cover, 2);
  EXPECT_TRUE(d.regular);
}

}  // namespace
}  // namespace paramx
