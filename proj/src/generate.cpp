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

#include "paramx/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "paramx/error.hpp"

namespace paramx {
namespace {

constexpr std::array<std::pair<std::string_view, Family>, 4> kFamilies{{
    {"random_gnp", Family::kRandomGnp},
    {"layered_dag", Family::kLayeredDag},
    {"bidirected_ring", Family::kBidirectedRing},
    {"clique_like", Family::kCliqueLike},
}};

constexpr std::array<std::pair<std::string_view, ProblemKind>, 8> kKinds{{
    {"dst", ProblemKind::kDst},
    {"scss", ProblemKind::kScss},
    {"dsf", ProblemKind::kDsf},
    {"dsn", ProblemKind::kDsn},
    {"mec", ProblemKind::kMec},
    {"mcc", ProblemKind::kMcc},
    {"setcover", ProblemKind::kSetCover},
    {"projgame", ProblemKind::kProjGame},
}};

bool undirected(ProblemKind kind) {
  return kind == ProblemKind::kMec || kind == ProblemKind::kMcc;
}

// Collects edges without duplicates. Planted edges are tracked separately
// so their total weight can be reported as the planted cost.
class EdgeBuilder {
 public:
  EdgeBuilder(int n, bool undirected, const GenParams& params, Rng& rng)
      : n_(n), undirected_(undirected), params_(params), rng_(rng) {}

  bool has(Vertex u, Vertex v) const {
    if (undirected_ && u > v) std::swap(u, v);
    return weights_.contains({u, v});
  }

  void plant(Vertex u, Vertex v) {
    add(u, v);
    if (undirected_ && u > v) std::swap(u, v);
    planted_.insert({u, v});
  }

  void plant_path(const std::vector<Vertex>& walk) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) plant(walk[i], walk[i + 1]);
  }

  // Background edge, subject to the edge cap.
  void offer(Vertex u, Vertex v) {
    if (params_.max_edges > 0 && background_ >= params_.max_edges) return;
    if (has(u, v)) return;
    add(u, v);
    ++background_;
  }

  DiGraph build() const {
    std::vector<Edge> edges;
    for (const auto& [uv, w] : weights_) edges.push_back({uv.first, uv.second, w});
    return DiGraph(n_, std::move(edges));
  }

  Weight planted_cost() const {
    Weight total = 0;
    for (const auto& uv : planted_) total += weights_.at(uv);
    return total;
  }

  std::size_t size() const { return weights_.size(); }

  Weight walk_cost(const std::set<std::pair<Vertex, Vertex>>& edges) const {
    Weight total = 0;
    for (const auto& uv : edges) total += weights_.at(uv);
    return total;
  }

 private:
  void add(Vertex u, Vertex v) {
    if (undirected_ && u > v) std::swap(u, v);
    if (weights_.contains({u, v})) return;
    Weight w = params_.max_weight > 1 ? 1 + rng_.below(params_.max_weight) : 1;
    weights_[{u, v}] = w;
  }

  int n_;
  bool undirected_;
  const GenParams& params_;
  Rng& rng_;
  std::map<std::pair<Vertex, Vertex>, Weight> weights_;
  std::set<std::pair<Vertex, Vertex>> planted_;
  int background_ = 0;
};

int layer_of(Vertex v, int n, int layers) {
  return static_cast<int>(static_cast<std::int64_t>(v) * layers / n);
}

void add_background(Family family, const GenParams& params, const std::vector<int>& colors,
                    EdgeBuilder& builder, Rng& rng) {
  const int n = params.n;
  const bool undirected_kind = undirected(params.kind);
  auto allowed = [&](Vertex u, Vertex v) {
    return colors.empty() || colors[u] != colors[v];
  };
  switch (family) {
    case Family::kRandomGnp:
    case Family::kCliqueLike:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u == v || (undirected_kind && u > v)) continue;
          if (rng.coin(params.edge_prob) && allowed(u, v)) builder.offer(u, v);
        }
      }
      break;
    case Family::kLayeredDag: {
      const int layers = std::clamp(params.layers, 1, n);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (layer_of(v, n, layers) != layer_of(u, n, layers) + 1) continue;
          if (rng.coin(params.edge_prob) && allowed(u, v)) builder.offer(u, v);
        }
      }
      break;
    }
    case Family::kBidirectedRing:
      break;  // the ring itself is planted structure
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::kInput, "generate: " + what);
}

int terminal_count(const GenParams& params, int available) {
  if (params.terminals <= 0) return available;
  return std::min(params.terminals, available);
}

// s -> t directly, or through a random intermediate vertex.
std::vector<Vertex> random_route(Vertex s, Vertex t, int n, Rng& rng) {
  if (n > 2 && rng.coin(0.5)) {
    Vertex w = rng.below(n - 2);
    for (Vertex skip : {std::min(s, t), std::max(s, t)}) {
      if (w >= skip) ++w;
    }
    return {s, w, t};
  }
  return {s, t};
}

std::vector<Vertex> ring_walk(Vertex s, Vertex t, int n, int step) {
  std::vector<Vertex> walk{s};
  for (Vertex v = s; v != t;) {
    v = ((v + step) % n + n) % n;
    walk.push_back(v);
  }
  return walk;
}

Generated generate_graph_kind(Family family, const GenParams& params, Rng& rng) {
  const int n = params.n;
  require(n >= 2, "needs at least 2 vertices");
  const bool ring = family == Family::kBidirectedRing;
  const bool clique = family == Family::kCliqueLike;

  std::vector<int> colors;
  if (params.kind == ProblemKind::kMcc) {
    require(params.colors >= 1 && params.colors <= n, "colors must be in 1..n");
    colors.assign(n, 0);
    std::vector<int> order = rng.sample(n, n);
    for (int i = 0; i < n; ++i) {
      colors[order[i]] = i < params.colors ? i : rng.below(params.colors);
    }
  }

  EdgeBuilder builder(n, undirected(params.kind), params, rng);

  // Structural part of the family: ring edges or a planted clique.
  std::vector<Vertex> core;
  if (ring) {
    for (Vertex v = 0; v < n; ++v) {
      builder.plant(v, (v + 1) % n);
      if (!undirected(params.kind)) builder.plant((v + 1) % n, v);
    }
  } else if (clique) {
    int size = terminal_count(params, n);
    if (params.kind == ProblemKind::kMcc) size = params.colors;
    size = std::max(size, 2);
    if (params.kind == ProblemKind::kMcc) {
      // One vertex of each color.
      std::map<int, Vertex> pick;
      for (Vertex v : rng.sample(n, n)) pick.emplace(colors[v], v);
      for (const auto& [_, v] : pick) core.push_back(v);
    } else {
      core = rng.sample(n, size);
    }
    for (Vertex u : core) {
      for (Vertex v : core) {
        if (u == v || (undirected(params.kind) && u > v)) continue;
        builder.plant(u, v);
      }
    }
  }
  // Terminals are drawn from the clique when there is one.
  auto draw = [&](int count) {
    if (!core.empty()) {
      std::vector<Vertex> out;
      for (int i : rng.sample(static_cast<int>(core.size()), std::min<int>(count, core.size()))) {
        out.push_back(core[i]);
      }
      return out;
    }
    return rng.sample(n, count);
  };
  auto route = [&](Vertex s, Vertex t) {
    return clique ? std::vector<Vertex>{s, t} : random_route(s, t, n, rng);
  };

  Generated out;
  switch (params.kind) {
    case ProblemKind::kScss: {
      ScssInstance x;
      x.terminals = draw(terminal_count(params, n));
      require(x.terminals.size() >= 2, "SCSS needs at least 2 terminals");
      if (!ring) {
        for (std::size_t i = 0; i < x.terminals.size(); ++i) {
          builder.plant_path(route(x.terminals[i], x.terminals[(i + 1) % x.terminals.size()]));
        }
      }
      add_background(family, params, colors, builder, rng);
      x.graph = builder.build();
      out.planted_cost = builder.planted_cost();
      out.instance = std::move(x);
      break;
    }
    case ProblemKind::kDst: {
      DstInstance x;
      std::vector<Vertex> ring_arc;
      std::vector<Vertex> picked = draw(terminal_count(params, n - 1) + 1);
      require(picked.size() >= 2, "DST needs a root and a terminal");
      x.root = picked.front();
      x.terminals.assign(picked.begin() + 1, picked.end());
      if (ring) {
        // Forward arc from the root to the farthest terminal.
        Vertex far = x.root;
        int best = 0;
        for (Vertex t : x.terminals) {
          int d = ((t - x.root) % n + n) % n;
          if (d > best) best = d, far = t;
        }
        ring_arc = ring_walk(x.root, far, n, 1);
        builder.plant_path(ring_arc);
      } else {
        std::vector<Vertex> in_tree{x.root};
        for (Vertex t : x.terminals) {
          if (std::find(in_tree.begin(), in_tree.end(), t) != in_tree.end()) continue;
          Vertex from = in_tree[rng.below(static_cast<int>(in_tree.size()))];
          auto walk = route(from, t);
          builder.plant_path(walk);
          in_tree.insert(in_tree.end(), walk.begin() + 1, walk.end());
        }
      }
      add_background(family, params, colors, builder, rng);
      x.graph = builder.build();
      // The ring holds more than the planted arc, so cost only the arc.
      if (ring) {
        std::set<std::pair<Vertex, Vertex>> arc;
        for (std::size_t i = 0; i + 1 < ring_arc.size(); ++i) arc.insert({ring_arc[i], ring_arc[i + 1]});
        out.planted_cost = builder.walk_cost(arc);
      } else {
        out.planted_cost = builder.planted_cost();
      }
      out.instance = std::move(x);
      break;
    }
    case ProblemKind::kDsf:
    case ProblemKind::kDsn: {
      require(params.pairs >= 1, "need at least one pair");
      require(params.max_demand >= 1 && params.max_demand <= 2, "max_demand must be 1 or 2");
      std::set<std::pair<Vertex, Vertex>> used;
      std::vector<DemandPair> pairs;
      for (int attempt = 0; static_cast<int>(pairs.size()) < params.pairs && attempt < 64 * params.pairs;
           ++attempt) {
        auto st = draw(2);
        if (st.size() < 2 || !used.emplace(st[0], st[1]).second) continue;
        int demand = params.kind == ProblemKind::kDsn ? 1 + rng.below(params.max_demand) : 1;
        if (demand == 2 && n < 3) demand = 1;
        pairs.push_back({st[0], st[1], demand});
      }
      require(!pairs.empty(), "could not draw distinct pairs");
      std::set<std::pair<Vertex, Vertex>> walks;
      auto plant_walk = [&](const std::vector<Vertex>& walk) {
        builder.plant_path(walk);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) walks.insert({walk[i], walk[i + 1]});
      };
      for (const DemandPair& p : pairs) {
        if (ring) {
          if (p.demand == 2) plant_walk(ring_walk(p.source, p.sink, n, -1));
          plant_walk(ring_walk(p.source, p.sink, n, 1));
        } else if (p.demand == 2) {
          // Direct edge plus a two-hop detour: edge-disjoint by construction.
          builder.plant(p.source, p.sink);
          Vertex w = rng.below(n - 2);
          for (Vertex skip : {std::min(p.source, p.sink), std::max(p.source, p.sink)}) {
            if (w >= skip) ++w;
          }
          builder.plant_path({p.source, w, p.sink});
        } else {
          builder.plant_path(route(p.source, p.sink));
        }
      }
      add_background(family, params, colors, builder, rng);
      DiGraph g = builder.build();
      if (params.kind == ProblemKind::kDsf) {
        DsfInstance x{std::move(g), {}};
        for (const DemandPair& p : pairs) x.pairs.push_back({p.source, p.sink});
        out.instance = std::move(x);
      } else {
        out.instance = DsnInstance{std::move(g), pairs};
      }
      out.planted_cost = ring ? builder.walk_cost(walks) : builder.planted_cost();
      break;
    }
    case ProblemKind::kMec: {
      add_background(family, params, colors, builder, rng);
      if (builder.size() == 0) builder.plant(0, 1);
      MecInstance x{builder.build(), params.k, {}};
      const std::int64_t m = x.graph.num_edges();
      if (x.k <= 0) x.k = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m)));
      require(x.k <= m, "k exceeds the number of edges");
      out.instance = std::move(x);
      break;
    }
    case ProblemKind::kMcc: {
      add_background(family, params, colors, builder, rng);
      MccInstance x{builder.build(), colors, params.colors};
      if (clique) out.planted_cost = params.colors;
      out.instance = std::move(x);
      break;
    }
    default:
      fail(ErrorCode::kInput, "generate: not a graph kind");
  }
  return out;
}

Generated generate_set_cover(const GenParams& params, Rng& rng) {
  require(params.universe >= 0 && params.sets >= 1, "need universe >= 0 and at least one set");
  SetCoverInstance x;
  x.universe_size = params.universe;
  x.sets.assign(params.sets, {});
  for (int e = 0; e < params.universe; ++e) {
    bool covered = false;
    for (int s = 0; s < params.sets; ++s) {
      if (rng.coin(params.edge_prob)) {
        x.sets[s].push_back(e);
        covered = true;
      }
    }
    if (!covered) x.sets[rng.below(params.sets)].push_back(e);
  }
  for (auto& s : x.sets) std::sort(s.begin(), s.end());
  return {std::move(x), std::nullopt, {}};
}

Generated generate_projection_game(const GenParams& params, Rng& rng) {
  require(params.left >= 1 && params.right >= 1 && params.alphabet >= 1,
          "need v1, v2, sigma >= 1");
  ProjectionGame g;
  g.left = params.left;
  g.right = params.right;
  g.alphabet = params.alphabet;
  std::vector<int> labeling(g.left + g.right);
  for (int& label : labeling) label = rng.below(g.alphabet);
  for (int a = 0; a < g.left; ++a) {
    for (int b = 0; b < g.right; ++b) {
      if (rng.coin(params.edge_prob)) g.edges.emplace_back(a, b);
    }
  }
  if (g.edges.empty()) g.edges.emplace_back(rng.below(g.left), rng.below(g.right));
  for (auto [a, b] : g.edges) {
    std::vector<int> table(g.alphabet);
    for (int& y : table) y = rng.below(g.alphabet);
    if (params.satisfiable) table[labeling[a]] = labeling[g.left + b];
    g.projection.push_back(std::move(table));
  }
  Generated out{std::move(g), std::nullopt, {}};
  if (params.satisfiable) out.planted_labeling = std::move(labeling);
  return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool Rng::coin(double probability) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < probability;
}

std::vector<int> Rng::sample(int n, int count) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  count = std::clamp(count, 0, n);
  for (int i = 0; i < count; ++i) {
    int j = i + below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto [key, value] : kFamilies) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (auto [key, value] : kFamilies) {
    if (value == family) return key;
  }
  return "?";
}

std::optional<ProblemKind> kind_from_name(std::string_view name) {
  for (auto [key, value] : kKinds) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::string_view kind_name(ProblemKind kind) {
  for (auto [key, value] : kKinds) {
    if (value == kind) return key;
  }
  return "?";
}

Generated generate(Family family, const GenParams& params, std::uint64_t seed) {
  Rng rng(seed);
  Generated out;
  switch (params.kind) {
    case ProblemKind::kSetCover:
      out = generate_set_cover(params, rng);
      break;
    case ProblemKind::kProjGame:
      out = generate_projection_game(params, rng);
      break;
    default:
      out = generate_graph_kind(family, params, rng);
  }
  validate(out.instance);
  return out;
}

}  // namespace paramx
