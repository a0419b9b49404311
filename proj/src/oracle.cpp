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

#include "paramx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

#include "paramx/error.hpp"

namespace paramx {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}

  // Cheap enough to call on every candidate; reads the clock every 4096.
  void tick() {
    if ((++count_ & 0xfff) == 0 && Clock::now() > end_) {
      fail(ErrorCode::kRefused, "oracle time cap exceeded");
    }
  }

 private:
  Clock::time_point end_;
  std::uint64_t count_ = 0;
};

// Visits k-subsets of {0..n-1} in lexicographic order. The visitor returns
// false to stop early.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Edge-subset view of a graph with bitmask adjacency, n <= 64.
class SubsetGraph {
 public:
  explicit SubsetGraph(const DiGraph& g) : g_(g), out_(g.num_vertices()), in_(g.num_vertices()) {}

  void load(const std::vector<int>& edges) {
    std::fill(out_.begin(), out_.end(), 0);
    std::fill(in_.begin(), in_.end(), 0);
    for (int id : edges) {
      const Edge& e = g_.edge(id);
      out_[e.tail] |= Mask{1} << e.head;
      in_[e.head] |= Mask{1} << e.tail;
    }
  }

  Mask forward(Vertex src) const { return closure(src, out_); }
  Mask backward(Vertex src) const { return closure(src, in_); }

  // Edge-disjoint s->t path count on the loaded subset, capped at `need`.
  int disjoint_paths(Vertex s, Vertex t, int need) const {
    const int n = g_.num_vertices();
    std::vector<std::vector<int>> residual(n, std::vector<int>(n, 0));
    for (Vertex u = 0; u < n; ++u) {
      for (Mask m = out_[u]; m; m &= m - 1) residual[u][std::countr_zero(m)] += 1;
    }
    int flow = 0;
    std::vector<int> parent(n);
    while (flow < need) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      std::vector<Vertex> queue{s};
      for (std::size_t head = 0; head < queue.size() && parent[t] < 0; ++head) {
        Vertex u = queue[head];
        for (Vertex v = 0; v < n; ++v) {
          if (parent[v] < 0 && residual[u][v] > 0) {
            parent[v] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[t] < 0) break;
      for (Vertex v = t; v != s; v = parent[v]) {
        residual[parent[v]][v] -= 1;
        residual[v][parent[v]] += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static Mask closure(Vertex src, const std::vector<Mask>& adj) {
    Mask seen = Mask{1} << src;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  const DiGraph& g_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

bool contains(Mask m, Vertex v) { return (m >> v) & 1; }

OracleResult enumerate_edge_subsets(const DiGraph& g, const OracleBudget& budget,
                                    const std::function<bool(const SubsetGraph&)>& feasible,
                                    const std::string& producer) {
  const int m = g.num_edges();
  if (m > budget.max_edges_for_subset_enum) {
    fail(ErrorCode::kRefused, "oracle refused: " + std::to_string(m) + " edges exceeds budget of " +
                                  std::to_string(budget.max_edges_for_subset_enum));
  }
  if (g.num_vertices() > 64) fail(ErrorCode::kRefused, "oracle refused: more than 64 vertices");

  std::vector<Weight> sorted;
  for (const Edge& e : g.edges()) sorted.push_back(e.weight);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Weight> cheapest(m + 1, 0);  // least possible cost of a c-subset
  for (int c = 0; c < m; ++c) cheapest[c + 1] = cheapest[c] + sorted[c];

  SubsetGraph sub(g);
  Deadline deadline(budget.time_cap_seconds);
  bool found = false;
  Weight best_cost = 0;
  std::vector<int> best;
  for (int c = 0; c <= m; ++c) {
    if (found && cheapest[c] >= best_cost) break;
    for_each_combination(m, c, [&](const std::vector<int>& combo) {
      deadline.tick();
      Weight cost = 0;
      for (int id : combo) cost += g.edge(id).weight;
      if (found && cost >= best_cost) return true;
      sub.load(combo);
      if (!feasible(sub)) return true;
      found = true;
      best_cost = cost;
      best = combo;
      return cost > cheapest[c];  // nothing cheaper remains at this size
    });
  }
  OracleResult result;
  result.feasible = found;
  if (found) {
    result.solution = Solution::edge_set(g, best, producer);
    result.opt = best_cost;
  }
  return result;
}

}  // namespace

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

OracleBudget parse_budget(std::string_view spec, OracleBudget base) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = trim(spec.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::kInput, "oracle budget: expected key=value, got '" + std::string(item) + "'");
    }
    std::string key(trim(item.substr(0, eq)));
    std::string value(trim(item.substr(eq + 1)));
    char* end = nullptr;
    double number = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || number <= 0) {
      fail(ErrorCode::kInput, "oracle budget: '" + key + "' needs a positive number");
    }
    if (key != "time" && number != std::floor(number)) {
      fail(ErrorCode::kInput, "oracle budget: '" + key + "' needs an integer");
    }
    if (key == "edges") {
      base.max_edges_for_subset_enum = static_cast<int>(number);
    } else if (key == "sets") {
      base.max_sets_for_cover_enum = static_cast<int>(number);
    } else if (key == "vertices") {
      base.max_vertices_for_mec_enum = static_cast<int>(number);
    } else if (key == "time") {
      base.time_cap_seconds = number;
    } else {
      fail(ErrorCode::kInput, "oracle budget: unknown key '" + key + "'");
    }
  }
  return base;
}

OracleBudget OracleBudget::from_env() {
  const char* spec = std::getenv("PARAMX_ORACLE_BUDGET");
  return spec ? parse_budget(spec) : OracleBudget{};
}

OracleResult opt_edge_subset(const DstInstance& x, const OracleBudget& budget) {
  return enumerate_edge_subsets(
      x.graph, budget,
      [&](const SubsetGraph& sub) {
        Mask reach = sub.forward(x.root);
        return std::all_of(x.terminals.begin(), x.terminals.end(),
                           [&](Vertex t) { return contains(reach, t); });
      },
      "oracle");
}

OracleResult opt_edge_subset(const ScssInstance& x, const OracleBudget& budget) {
  return enumerate_edge_subsets(
      x.graph, budget,
      [&](const SubsetGraph& sub) {
        Mask out = sub.forward(x.terminals.front());
        Mask in = sub.backward(x.terminals.front());
        return std::all_of(x.terminals.begin(), x.terminals.end(),
                           [&](Vertex t) { return contains(out, t) && contains(in, t); });
      },
      "oracle");
}

OracleResult opt_edge_subset(const DsfInstance& x, const OracleBudget& budget) {
  return enumerate_edge_subsets(
      x.graph, budget,
      [&](const SubsetGraph& sub) {
        return std::all_of(x.pairs.begin(), x.pairs.end(), [&](const TerminalPair& p) {
          return contains(sub.forward(p.source), p.sink);
        });
      },
      "oracle");
}

OracleResult opt_edge_subset(const DsnInstance& x, const OracleBudget& budget) {
  return enumerate_edge_subsets(
      x.graph, budget,
      [&](const SubsetGraph& sub) {
        for (const DemandPair& p : x.pairs) {
          if (!contains(sub.forward(p.source), p.sink)) return false;
        }
        for (const DemandPair& p : x.pairs) {
          if (p.demand > 1 && sub.disjoint_paths(p.source, p.sink, p.demand) < p.demand) {
            return false;
          }
        }
        return true;
      },
      "oracle");
}

OracleResult opt_vertex_subset_mec(const MecInstance& x, const OracleBudget& budget) {
  const int n = x.graph.num_vertices();
  OracleResult result;
  if (x.graph.num_edges() < x.k) return result;
  if (n > budget.max_vertices_for_mec_enum || n > 64) {
    fail(ErrorCode::kRefused, "oracle refused: " + std::to_string(n) +
                                  " vertices exceeds budget of " +
                                  std::to_string(budget.max_vertices_for_mec_enum));
  }
  Deadline deadline(budget.time_cap_seconds);
  std::vector<int> best;
  for (int c = 0; c <= n && !result.feasible; ++c) {
    for_each_combination(n, c, [&](const std::vector<int>& combo) {
      deadline.tick();
      Mask in = 0;
      for (int v : combo) in |= Mask{1} << v;
      std::int64_t induced = 0;
      for (const Edge& e : x.graph.edges()) induced += contains(in, e.tail) && contains(in, e.head);
      if (induced < x.k) return true;
      result.feasible = true;
      best = combo;
      return false;
    });
  }
  if (result.feasible) {
    result.solution = Solution::vertex_set(best, "oracle");
    result.opt = result.solution.cost;
  }
  return result;
}

CoverResult opt_set_cover(const SetCoverInstance& x, const OracleBudget& budget) {
  const int count = static_cast<int>(x.sets.size());
  if (count > budget.max_sets_for_cover_enum) {
    fail(ErrorCode::kRefused, "oracle refused: " + std::to_string(count) +
                                  " sets exceeds budget of " +
                                  std::to_string(budget.max_sets_for_cover_enum));
  }
  const std::size_t words = static_cast<std::size_t>((x.universe_size + 63) / 64);
  std::vector<std::vector<Mask>> bits(count, std::vector<Mask>(words, 0));
  std::vector<Mask> all(words, 0);
  for (int i = 0; i < count; ++i) {
    for (std::int64_t e : x.sets[i]) bits[i][e / 64] |= Mask{1} << (e % 64);
  }
  for (std::int64_t e = 0; e < x.universe_size; ++e) all[e / 64] |= Mask{1} << (e % 64);

  auto covers = [&](const std::vector<int>& combo) {
    for (std::size_t w = 0; w < words; ++w) {
      Mask acc = 0;
      for (int i : combo) acc |= bits[i][w];
      if (acc != all[w]) return false;
    }
    return true;
  };

  CoverResult result;
  std::vector<int> everything(count);
  std::iota(everything.begin(), everything.end(), 0);
  if (!covers(everything)) return result;

  Deadline deadline(budget.time_cap_seconds);
  for (int c = 0; c <= count && !result.feasible; ++c) {
    for_each_combination(count, c, [&](const std::vector<int>& combo) {
      deadline.tick();
      if (!covers(combo)) return true;
      result.feasible = true;
      result.cover = combo;
      result.opt = c;
      return false;
    });
  }
  return result;
}

bool has_multicolored_clique(const MccInstance& x) {
  const int n = x.graph.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : x.graph.edges()) adj[e.tail][e.head] = adj[e.head][e.tail] = true;
  bool found = false;
  for_each_combination(n, x.p, [&](const std::vector<int>& combo) {
    for (std::size_t i = 0; i < combo.size(); ++i) {
      for (std::size_t j = i + 1; j < combo.size(); ++j) {
        if (!adj[combo[i]][combo[j]] || x.colors[combo[i]] == x.colors[combo[j]]) return true;
      }
    }
    found = true;
    return false;
  });
  return found;
}

}  // namespace paramx
