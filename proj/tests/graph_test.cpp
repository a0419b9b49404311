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

#include "paramx/graph.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "paramx/error.hpp"
#include "paramx/generate.hpp"

namespace paramx {
namespace {

DiGraph random_graph(std::uint64_t seed, int n, double p) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.coin(p)) edges.push_back({u, v, 1 + rng.below(4)});
    }
  }
  return DiGraph(n, edges);
}

// Reachability by repeated squaring of a boolean matrix, independent of the
// BFS in graph.cpp.
std::vector<Vertex> closure_reach(const DiGraph& g, Vertex src, const std::vector<bool>& allowed) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) m[v][v] = true;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (allowed[e]) m[g.edge(e).tail][g.edge(e).head] = true;
  }
  for (int round = 0; round < n; ++round) {
    auto next = m;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (!m[i][k]) continue;
        for (int j = 0; j < n; ++j) {
          if (m[k][j]) next[i][j] = true;
        }
      }
    }
    m = next;
  }
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if (m[src][v]) out.push_back(v);
  }
  return out;
}

TEST(DiGraph, RejectsBadEdges) {
  EXPECT_THROW(DiGraph(2, {{0, 2}}), Error);
  EXPECT_THROW(DiGraph(2, {{1, 1}}), Error);
  EXPECT_THROW(DiGraph(2, {{0, 1, -1}}), Error);
  EXPECT_THROW(DiGraph(2, {{0, 1}, {0, 1}}), Error);
  EXPECT_NO_THROW(DiGraph(2, {{0, 1}, {1, 0}}));
}

TEST(DiGraph, AdjacencyAndCost) {
  DiGraph g(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 7}});
  ASSERT_EQ(g.out_edges(0).size(), 2u);
  EXPECT_EQ(g.in_edges(2).size(), 2u);
  EXPECT_EQ(g.find_edge(1, 2), 1);
  EXPECT_FALSE(g.find_edge(2, 1).has_value());
  std::vector<EdgeId> ids{0, 1};
  EXPECT_EQ(g.cost(ids), 5);
  std::vector<EdgeId> bad{5};
  EXPECT_THROW((void)g.cost(bad), Error);
}

TEST(DiGraph, ReverseIsAnInvolutionKeepingIndices) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DiGraph g = random_graph(seed, 6, 0.35);
    DiGraph r = reverse(g);
    ASSERT_EQ(r.num_edges(), g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(r.edge(e).tail, g.edge(e).head);
      EXPECT_EQ(r.edge(e).head, g.edge(e).tail);
      EXPECT_EQ(r.edge(e).weight, g.edge(e).weight);
    }
    EXPECT_EQ(reverse(r), g) << "seed " << seed;
  }
}

TEST(DiGraph, ReachableMatchesMatrixClosure) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DiGraph g = random_graph(100 + seed, 7, 0.25);
    Rng rng(seed);
    std::vector<bool> allowed(g.num_edges());
    std::vector<EdgeId> subset;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      allowed[e] = rng.coin(0.7);
      if (allowed[e]) subset.push_back(e);
    }
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      EXPECT_EQ(reachable(g, s, subset), closure_reach(g, s, allowed)) << "seed " << seed;
      EXPECT_EQ(reachable(g, s), closure_reach(g, s, std::vector<bool>(g.num_edges(), true)));
    }
  }
}

TEST(DiGraph, ReachableRejectsBadEdgeIndex) {
  DiGraph g(2, {{0, 1}});
  std::vector<EdgeId> bad{3};
  EXPECT_THROW(reachable(g, 0, bad), Error);
}

TEST(EdgeSets, UnionIsSortedAndUnique) {
  EXPECT_EQ(make_edge_set({3, 1, 3, 2}), (EdgeSet{1, 2, 3}));
  EXPECT_EQ(edge_union({1, 4}, {2, 4, 6}), (EdgeSet{1, 2, 4, 6}));
}

TEST(ShortestPaths, MatchesBellmanFord) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    DiGraph g = random_graph(200 + seed, 7, 0.3);
    ShortestPaths sp(g);
    const int n = g.num_vertices();
    for (Vertex s = 0; s < n; ++s) {
      std::vector<Weight> d(n, kUnreachable);
      d[s] = 0;
      for (int round = 0; round < n; ++round) {
        for (const Edge& e : g.edges()) {
          if (d[e.tail] < kUnreachable) d[e.head] = std::min(d[e.head], d[e.tail] + e.weight);
        }
      }
      for (Vertex t = 0; t < n; ++t) {
        ASSERT_EQ(sp.distance(s, t), d[t]);
        std::vector<EdgeId> path = sp.path(s, t);
        if (s == t || d[t] >= kUnreachable) {
          EXPECT_TRUE(path.empty());
          continue;
        }
        EXPECT_EQ(g.cost(path), d[t]);
        EXPECT_EQ(g.edge(path.front()).tail, s);
        EXPECT_EQ(g.edge(path.back()).head, t);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          EXPECT_EQ(g.edge(path[i]).head, g.edge(path[i + 1]).tail);
        }
      }
    }
  }
}

}  // namespace
}  // namespace paramx
