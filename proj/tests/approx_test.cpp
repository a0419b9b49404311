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

#include <gtest/gtest.h>

#include "paramx/error.hpp"
#include "paramx/generate.hpp"
#include "paramx/io.hpp"
#include "paramx/oracle.hpp"

namespace paramx {
namespace {

ScssInstance triangle() {
  return {DiGraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}), {0, 1, 2}, {}};
}

template <typename X>
X random_instance(ProblemKind kind, std::uint64_t seed) {
  const Family families[] = {Family::kRandomGnp, Family::kLayeredDag, Family::kBidirectedRing,
                             Family::kCliqueLike};
  GenParams p;
  p.kind = kind;
  p.n = 3 + static_cast<int>(seed % 6);
  p.terminals = 2 + static_cast<int>(seed % 3);
  p.pairs = 1 + static_cast<int>(seed % 3);
  p.max_demand = 2;
  p.max_edges = 8;
  return std::get<X>(generate(families[seed % 4], p, seed).instance);
}

TEST(ScssPoly, TriangleIsTwoStars) {
  ApproxOutcome o = scss_poly(triangle());
  EXPECT_EQ(o.solution.cost, 4);
  EXPECT_TRUE(is_feasible(triangle(), o.solution.items));
  ASSERT_EQ(o.subcalls.size(), 2u);
  EXPECT_EQ(o.subcalls[0].cost, 2);
  EXPECT_EQ(o.subcalls[1].cost, 2);
}

TEST(ScssPoly, TwoCycleIsForced) {
  ScssInstance x{DiGraph(3, {{0, 1}, {1, 0}, {1, 2}}), {0, 1}, {}};
  ApproxOutcome o = scss_poly(x);
  EXPECT_EQ(o.solution.items, (std::vector<int>{0, 1}));
  EXPECT_EQ(o.solution.cost, 2);
}

TEST(ScssPoly, InfeasibleThrows) {
  ScssInstance x{DiGraph(2, {{0, 1}}), {0, 1}, {}};
  try {
    scss_poly(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(ScssPoly, CorpusEnvelope) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto x = random_instance<ScssInstance>(ProblemKind::kScss, seed);
    const std::int64_t opt = opt_edge_subset(x).opt;
    for (bool all : {false, true}) {
      ApproxConfig cfg;
      cfg.try_all_hubs = all;
      ApproxOutcome o = scss_poly(x, cfg);
      EXPECT_TRUE(is_feasible(x, o.solution.items));
      EXPECT_GE(o.solution.cost, opt);
      EXPECT_LE(o.solution.cost, 2 * static_cast<std::int64_t>(x.terminals.size()) * opt)
          << serialize_instance(x);
    }
  }
}

TEST(ScssFpt, TriangleThreshold) {
  ApproxOutcome ok = scss_fpt(triangle(), 3);
  EXPECT_FALSE(ok.solution.rejected());
  EXPECT_EQ(ok.solution.cost, 4);
  ApproxOutcome no = scss_fpt(triangle(), 1);
  EXPECT_TRUE(no.solution.rejected());
  EXPECT_FALSE(no.diagnosis.empty());
  EXPECT_FALSE(scss_fpt(triangle(), 2).solution.rejected());
}

TEST(ScssFpt, InfeasibleRejects) {
  ApproxOutcome o = scss_fpt(ScssInstance{DiGraph(2, {{0, 1}}), {0, 1}, {}}, 10);
  EXPECT_TRUE(o.solution.rejected());
  EXPECT_NE(o.diagnosis.find("infeasible"), std::string::npos);
}

TEST(ScssFpt, AcceptsAtOptWithinTwice) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto x = random_instance<ScssInstance>(ProblemKind::kScss, 500 + seed);
    const std::int64_t opt = opt_edge_subset(x).opt;
    for (std::int64_t p = 0; p <= opt + 1; ++p) {
      ApproxOutcome o = scss_fpt(x, p);
      if (p >= opt) ASSERT_FALSE(o.solution.rejected()) << serialize_instance(x);
      if (o.solution.rejected()) continue;
      EXPECT_LE(o.solution.cost, 2 * p);
      EXPECT_LE(o.solution.cost, 2 * opt);
      EXPECT_TRUE(is_feasible(x, o.solution.items));
    }
  }
}

TEST(DsfApprox, SharedSource) {
  DsfInstance x{DiGraph(3, {{0, 1}, {0, 2}, {1, 2}}), {{0, 1}, {0, 2}}};
  ApproxOutcome o = dsf_approx(x);
  EXPECT_EQ(o.solution.items, (std::vector<int>{0, 1}));
  EXPECT_EQ(o.subcalls.size(), 1u);
}

TEST(DsfApprox, PathPair) {
  DsfInstance x{DiGraph(3, {{0, 1}, {1, 2}}), {{0, 2}}};
  EXPECT_EQ(dsf_approx(x).solution.cost, 2);
}

TEST(DsfApprox, InfeasibleNamesThePair) {
  DsfInstance x{DiGraph(3, {{0, 1}}), {{0, 1}, {2, 0}}};
  try {
    dsf_approx(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
    EXPECT_NE(std::string(e.what()).find("(2,0)"), std::string::npos) << e.what();
  }
}

TEST(DsfApprox, CorpusFeasible) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto x = random_instance<DsfInstance>(ProblemKind::kDsf, seed);
    if (x.graph.num_edges() > OracleBudget{}.max_edges_for_subset_enum) continue;
    ApproxOutcome o = dsf_approx(x);
    EXPECT_TRUE(is_feasible(x, o.solution.items));
    EXPECT_GE(o.solution.cost, opt_edge_subset(x).opt);
  }
}

TEST(DsnApprox, DiamondAndPath) {
  DiGraph diamond(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  EXPECT_EQ(dsn_approx(DsnInstance{diamond, {{0, 3, 2}}}).solution.cost, 4);
  DiGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(dsn_approx(DsnInstance{path, {{0, 2, 1}}}).solution.cost, 2);
  EXPECT_THROW(dsn_approx(DsnInstance{path, {{0, 2, 2}}}), Error);
}

TEST(DsnApprox, PerPairBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto x = random_instance<DsnInstance>(ProblemKind::kDsn, seed);
    if (x.graph.num_edges() > OracleBudget{}.max_edges_for_subset_enum) continue;
    const std::int64_t opt = opt_edge_subset(x).opt;
    ApproxOutcome o = dsn_approx(x);
    EXPECT_TRUE(is_feasible(x, o.solution.items));
    Weight sum = 0;
    for (const Subcall& c : o.subcalls) {
      EXPECT_LE(c.cost, opt);
      sum += c.cost;
    }
    EXPECT_LE(o.solution.cost, sum);
    EXPECT_LE(o.solution.cost, static_cast<std::int64_t>(x.pairs.size()) * opt);
  }
}

TEST(MecApprox, Exemplars) {
  DiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(mec_approx(MecInstance{star, 3, {}}).solution.items, (std::vector<int>{0, 1, 2, 3}));
  DiGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(mec_approx(MecInstance{tri, 3, {}}).solution.cost, 3);
  EXPECT_EQ(mec_approx(MecInstance{tri, 1, {}}).solution.cost, 2);
  EXPECT_THROW(mec_approx(MecInstance{tri, 4, {}}), Error);
}

TEST(MecApprox, RandomChoiceIsSeeded) {
  DiGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  ApproxConfig cfg;
  cfg.mec_seed = 9;
  ApproxOutcome a = mec_approx(MecInstance{g, 3, {}}, cfg);
  ApproxOutcome b = mec_approx(MecInstance{g, 3, {}}, cfg);
  EXPECT_EQ(a.solution.items, b.solution.items);
  EXPECT_EQ(a.solution.producer, "mec(random)");
  EXPECT_LE(a.solution.cost, 6);
  EXPECT_TRUE(is_feasible(MecInstance{g, 3, {}}, a.solution.items));
}

}  // namespace
}  // namespace paramx
