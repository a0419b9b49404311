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

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "paramx/error.hpp"
#include "paramx/generate.hpp"

namespace paramx {
namespace {

using Word = std::uint64_t;

std::size_t word_count(std::int64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

Word last_word_mask(std::int64_t bits) {
  const int tail = static_cast<int>(bits % 64);
  return tail == 0 ? ~Word{0} : (Word{1} << tail) - 1;
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

SetSystem::SetSystem(int l, std::int64_t universe_size,
                     const std::vector<std::vector<std::int64_t>>& members)
    : l_(l), universe_size_(universe_size) {
  for (const auto& set : members) {
    std::vector<Word> row(word_count(universe_size), 0);
    for (std::int64_t b : set) {
      if (b < 0 || b >= universe_size) fail(ErrorCode::kInput, "set system element out of range");
      row[b / 64] |= Word{1} << (b % 64);
    }
    rows_.push_back(std::move(row));
  }
}

SetSystem SetSystem::from_rows(int l, std::int64_t universe_size, std::vector<std::vector<Word>> rows) {
  SetSystem s;
  s.l_ = l;
  s.universe_size_ = universe_size;
  s.rows_ = std::move(rows);
  return s;
}

SetSystemCheck verify_set_system(const SetSystem& sys) {
  SetSystemCheck check;
  const int m = sys.m();
  const std::size_t words = word_count(sys.universe_size());
  const Word tail = last_word_mask(sys.universe_size());
  std::vector<int> idx;
  std::vector<Word> acc(words);

  // Depth-first over index combinations; polarity masks enumerate which
  // chosen sets are complemented.
  std::function<bool(int, int)> choose = [&](int start, int remaining) -> bool {
    if (!idx.empty()) {
      const int j = static_cast<int>(idx.size());
      for (std::uint32_t polarity = 0; polarity < (std::uint32_t{1} << j); ++polarity) {
        ++check.collections_checked;
        bool covers = true;
        for (std::size_t w = 0; w < words && covers; ++w) {
          Word u = 0;
          for (int i = 0; i < j; ++i) {
            Word bits = sys.row(idx[i])[w];
            u |= (polarity >> i) & 1 ? ~bits : bits;
          }
          const Word full = w + 1 == words ? tail : ~Word{0};
          covers = (u & full) == full;
        }
        if (covers) {
          for (int i = 0; i < j; ++i) check.witness.emplace_back(idx[i], (polarity >> i) & 1);
          return false;
        }
      }
    }
    if (remaining == 0) return true;
    for (int i = start; i < m; ++i) {
      idx.push_back(i);
      bool ok = choose(i + 1, remaining - 1);
      idx.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  check.valid = choose(0, sys.l());
  return check;
}

CertifiedSetSystem build_set_system(int m, int l, std::uint64_t seed, const SetSystemConfig& cfg) {
  if (m < 1 || l < 1) fail(ErrorCode::kInput, "set system needs m >= 1 and l >= 1");
  if (m > cfg.max_m || l > cfg.max_l) {
    fail(ErrorCode::kInput, "set system (m=" + str(m) + ", l=" + str(l) +
                                ") exceeds the verified range m <= " + str(cfg.max_m) +
                                ", l <= " + str(cfg.max_l));
  }
  const auto universe = static_cast<std::int64_t>(
      std::ceil(cfg.universe_factor * std::ldexp(1.0, 2 * l) * m * m));
  const std::size_t words = word_count(universe);
  Rng rng(seed);
  for (int attempt = 1; attempt <= cfg.retry_cap; ++attempt) {
    std::vector<std::vector<Word>> rows(m, std::vector<Word>(words));
    for (auto& row : rows) {
      for (Word& w : row) w = rng.next();
      row.back() &= last_word_mask(universe);
    }
    SetSystem sys = SetSystem::from_rows(l, universe, std::move(rows));
    SetSystemCheck check = verify_set_system(sys);
    if (check.valid) return {std::move(sys), std::move(check), attempt};
  }
  fail(ErrorCode::kConstructionFailed, "no valid (" + str(m) + "," + str(l) + ")-set system after " +
                                           str(cfg.retry_cap) + " attempts; raise the universe size");
}

int label_set_index(const ProjectionGame& game, bool right_side, int vertex, int label) {
  const int w = right_side ? game.left + vertex : vertex;
  return w * game.alphabet + label;
}

SetCoverInstance projgame_to_setcover(const ProjectionGame& game, const SetSystem& sys) {
  validate(game);
  if (sys.m() != game.alphabet) {
    fail(ErrorCode::kInput, "alphabet mismatch: set system has m = " + str(sys.m()) +
                                " but sigma = " + str(game.alphabet));
  }
  const std::int64_t b_size = sys.universe_size();
  SetCoverInstance out;
  out.universe_size = static_cast<std::int64_t>(game.edges.size()) * b_size;
  const int vertices = game.left + game.right;
  out.sets.assign(static_cast<std::size_t>(vertices) * game.alphabet, {});
  out.labels.resize(out.sets.size());
  for (int u = 0; u < game.left; ++u) {
    for (int y = 0; y < game.alphabet; ++y) {
      out.labels[label_set_index(game, false, u, y)] = "S_{u" + str(u) + "," + str(y) + "}";
    }
  }
  for (int v = 0; v < game.right; ++v) {
    for (int x = 0; x < game.alphabet; ++x) {
      out.labels[label_set_index(game, true, v, x)] = "S_{v" + str(v) + "," + str(x) + "}";
    }
  }
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    const auto [u, v] = game.edges[e];
    const std::int64_t base = static_cast<std::int64_t>(e) * b_size;
    for (int x = 0; x < game.alphabet; ++x) {
      auto& right = out.sets[label_set_index(game, true, v, x)];
      auto& left = out.sets[label_set_index(game, false, u, x)];
      const int projected = game.projection[e][x];
      for (std::int64_t b = 0; b < b_size; ++b) {
        if (sys.contains(x, b)) right.push_back(base + b);
        if (!sys.contains(projected, b)) left.push_back(base + b);
      }
    }
  }
  return out;
}

bool is_cover(const SetCoverInstance& x, const std::vector<int>& chosen) {
  std::vector<bool> hit(x.universe_size, false);
  for (int s : chosen) {
    for (std::int64_t e : x.sets.at(s)) hit[e] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

CoverCheck labeling_to_cover(const ProjectionGame& game, const SetSystem& sys,
                             const std::vector<int>& labeling) {
  if (static_cast<int>(labeling.size()) != game.left + game.right) {
    fail(ErrorCode::kInput, "labeling must give one label per vertex");
  }
  for (int label : labeling) {
    if (label < 0 || label >= game.alphabet) fail(ErrorCode::kInput, "label out of range");
  }
  SetCoverInstance instance = projgame_to_setcover(game, sys);
  CoverCheck check;
  for (int u = 0; u < game.left; ++u) check.sets.push_back(label_set_index(game, false, u, labeling[u]));
  for (int v = 0; v < game.right; ++v) {
    check.sets.push_back(label_set_index(game, true, v, labeling[game.left + v]));
  }
  std::vector<bool> hit(instance.universe_size, false);
  for (int s : check.sets) {
    for (std::int64_t e : instance.sets[s]) hit[e] = true;
  }
  for (std::int64_t e = 0; e < instance.universe_size; ++e) {
    if (!hit[e]) check.uncovered.push_back(e);
  }
  check.covers = check.uncovered.empty();
  return check;
}

double satisfied_fraction(const ProjectionGame& game, const std::vector<int>& labeling) {
  if (game.edges.empty()) return 1.0;
  std::size_t good = 0;
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    const auto [u, v] = game.edges[e];
    if (game.projection[e][labeling[u]] == labeling[game.left + v]) ++good;
  }
  return static_cast<double>(good) / static_cast<double>(game.edges.size());
}

std::vector<int> greedy_set_cover(const SetCoverInstance& x) {
  validate(x);
  std::vector<bool> covered(x.universe_size, false);
  std::int64_t left = x.universe_size;
  std::vector<int> chosen;
  while (left > 0) {
    int best = -1;
    std::int64_t best_gain = 0;
    for (std::size_t s = 0; s < x.sets.size(); ++s) {
      std::int64_t gain = 0;
      for (std::int64_t e : x.sets[s]) gain += !covered[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(s);
      }
    }
    if (best < 0) {
      std::string missing;
      for (std::int64_t e = 0; e < x.universe_size; ++e) {
        if (!covered[e]) missing += (missing.empty() ? "" : ",") + str(e);
      }
      fail(ErrorCode::kInfeasible, "set cover: uncoverable elements {" + missing + "}");
    }
    for (std::int64_t e : x.sets[best]) {
      if (!covered[e]) {
        covered[e] = true;
        --left;
      }
    }
    chosen.push_back(best);
  }
  return chosen;
}

ScssToDsf scss_to_dsf(const ScssInstance& x) {
  validate(x);
  const int n = x.graph.num_vertices();
  const int l = static_cast<int>(x.terminals.size());
  std::vector<Edge> edges = x.graph.edges();
  for (int i = 0; i < l; ++i) {
    edges.push_back({n + i, x.terminals[i], 1});
    edges.push_back({x.terminals[i], n + l + i, 1});
  }
  ScssToDsf out;
  out.instance.graph = DiGraph(n + 2 * l, std::move(edges));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (i != j) out.instance.pairs.push_back({n + i, n + l + j});
    }
  }
  out.parameter_shift = 2 * l;
  out.terminals = l;
  return out;
}

EdgeSet dsf_solution_to_scss(const ScssToDsf& /*reduction*/, const EdgeSet& dsf_edges,
                             int original_edges) {
  EdgeSet out;
  for (EdgeId id : dsf_edges) {
    if (id < original_edges) out.push_back(id);
  }
  return out;
}

MccToMec mcc_to_mec(const MccInstance& x) {
  validate(x);
  if (x.p < 2) fail(ErrorCode::kInput, "mcc_to_mec: p must be >= 2 so that k = C(p,2) >= 1");
  MccToMec out;
  out.instance.graph = x.graph;
  out.instance.k = static_cast<std::int64_t>(x.p) * (x.p - 1) / 2;
  out.instance.target_size = x.p;
  for (const Edge& e : x.graph.edges()) {
    if (x.colors[e.tail] == x.colors[e.head]) {
      out.warnings.push_back("coloring is not proper: edge {" + str(e.tail) + "," + str(e.head) +
                             "} joins color " + str(x.colors[e.tail]));
      break;
    }
  }
  std::set<int> distinct(x.colors.begin(), x.colors.end());
  if (static_cast<int>(distinct.size()) != x.p) {
    out.warnings.push_back("coloring uses " + str(distinct.size()) + " colors, expected p = " + str(x.p));
  }
  return out;
}

SoundnessDiagnostic soundness_diagnostic(const ProjectionGame& game, const SetSystem& sys,
                                         const OracleBudget& budget) {
  validate(game);
  const int vertices = game.left + game.right;
  const double labelings = std::pow(static_cast<double>(game.alphabet), vertices);
  if (labelings > 1e6) fail(ErrorCode::kRefused, "soundness diagnostic: too many labelings");

  SoundnessDiagnostic d;
  std::vector<int> labeling(vertices, 0);
  while (true) {
    d.max_satisfiable_fraction = std::max(d.max_satisfiable_fraction, satisfied_fraction(game, labeling));
    int i = 0;
    while (i < vertices && ++labeling[i] == game.alphabet) labeling[i++] = 0;
    if (i == vertices) break;
  }
  const double l = sys.l();
  d.gap_premise = 2.0 / (l * l);
  d.premise_holds = d.max_satisfiable_fraction <= d.gap_premise;
  d.threshold = l / 8.0 * vertices;

  std::vector<int> degree(vertices, 0);
  for (auto [u, v] : game.edges) {
    ++degree[u];
    ++degree[game.left + v];
  }
  auto uniform = [](auto first, auto last) {
    return first == last || std::all_of(first, last, [&](int x) { return x == *first; });
  };
  d.regular = uniform(degree.begin(), degree.begin() + game.left) &&
              uniform(degree.begin() + game.left, degree.end());

  CoverResult cover = opt_set_cover(projgame_to_setcover(game, sys), budget);
  d.min_cover = cover.feasible ? cover.opt : -1;
  return d;
}

}  // namespace paramx
