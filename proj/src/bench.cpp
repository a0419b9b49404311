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

#include "paramx/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "paramx/error.hpp"
#include "paramx/generate.hpp"
#include "paramx/reductions.hpp"

namespace paramx {
namespace {

using std::to_string;

constexpr std::array<Family, 4> kFamilies = {Family::kRandomGnp, Family::kLayeredDag,
                                             Family::kBidirectedRing, Family::kCliqueLike};

// Planted structure of a figure1 instance stays within this many edges, so
// the remaining edge budget goes to background edges.
constexpr int kPlantedEdgeAllowance = 12;

std::string padded(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return buf;
}

std::string cell_id(std::string_view kind, int i, Family family) {
  return std::string(kind) + "-" + padded(i) + "-" + std::string(family_name(family));
}

int draw_in(Rng& rng, int lo, int hi) { return lo + rng.below(hi - lo + 1); }

struct Cells {
  const BenchOptions& options;
  std::vector<RatioReport> rows;

  void add(const Instance& x, Algo algo, const std::string& id, SolveOptions solve = {}) {
    rows.push_back(evaluate(x, algo, solve, options.budget, id));
  }
};

void figure1(Cells& cells, int i) {
  const BenchOptions& o = cells.options;
  Rng rng(derive_seed(o.seed, 1, i));
  const Family family = kFamilies[i % kFamilies.size()];
  GenParams base;
  base.n = draw_in(rng, 3, o.max_n);
  base.max_edges = std::max(0, o.budget.max_edges_for_subset_enum - kPlantedEdgeAllowance);

  GenParams scss = base;
  scss.kind = ProblemKind::kScss;
  scss.terminals = draw_in(rng, 2, std::min(4, base.n));
  Instance x = generate(family, scss, derive_seed(o.seed, 2, i)).instance;
  std::string id = cell_id("scss", i, family);
  cells.add(x, Algo::kScssPoly, id);
  cells.add(x, Algo::kScssFpt, id);
  cells.add(x, Algo::kScssFptLift, id);

  GenParams dst = base;
  dst.kind = ProblemKind::kDst;
  dst.terminals = draw_in(rng, 1, std::min(3, base.n - 1));
  x = generate(family, dst, derive_seed(o.seed, 3, i)).instance;
  id = cell_id("dst", i, family);
  cells.add(x, Algo::kDstExact, id);
  cells.add(x, Algo::kDstGreedy, id);

  GenParams dsf = base;
  dsf.kind = ProblemKind::kDsf;
  dsf.pairs = draw_in(rng, 1, 3);
  x = generate(family, dsf, derive_seed(o.seed, 4, i)).instance;
  cells.add(x, Algo::kDsf, cell_id("dsf", i, family));

  GenParams dsn = base;
  dsn.kind = ProblemKind::kDsn;
  dsn.pairs = draw_in(rng, 1, 2);
  dsn.max_demand = 2;
  x = generate(family, dsn, derive_seed(o.seed, 5, i)).instance;
  cells.add(x, Algo::kDsn, cell_id("dsn", i, family));

  GenParams mec = base;
  mec.kind = ProblemKind::kMec;
  mec.max_edges = 0;
  mec.edge_prob = 0.4;
  x = generate(family, mec, derive_seed(o.seed, 6, i)).instance;
  cells.add(x, Algo::kMec, cell_id("mec", i, family));
}

RatioReport blank_row(std::string id, std::string problem, std::string algorithm) {
  RatioReport r;
  r.instance_id = std::move(id);
  r.problem = std::move(problem);
  r.algorithm = std::move(algorithm);
  r.hard = true;
  r.outcome = "solution";
  return r;
}

struct OracleValue {
  OracleStatus status;
  std::int64_t opt;
};

template <typename X>
OracleValue edge_oracle(const X& x, const OracleBudget& budget) {
  try {
    OracleResult r = opt_edge_subset(x, budget);
    return {r.feasible ? OracleStatus::kOk : OracleStatus::kInfeasible, r.opt};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRefused) throw;
    return {OracleStatus::kRefused, 0};
  }
}

void finish(RatioReport& r, bool ok, const std::string& failure,
            std::chrono::steady_clock::time_point start) {
  r.pass = ok;
  if (!ok) r.detail = failure;
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void scss_dsf_row(Cells& cells, int i) {
  const BenchOptions& o = cells.options;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(derive_seed(o.seed, 11, i));
  const Family family = kFamilies[i % kFamilies.size()];
  GenParams p;
  p.kind = ProblemKind::kScss;
  p.n = draw_in(rng, 3, std::min(o.max_n, 7));
  p.terminals = draw_in(rng, 2, 3);
  // The image adds 2l edges; keep it inside the oracle's edge budget.
  p.max_edges = std::max(0, o.budget.max_edges_for_subset_enum - 12);
  const auto src = std::get<ScssInstance>(generate(family, p, derive_seed(o.seed, 12, i)).instance);
  const ScssToDsf red = scss_to_dsf(src);

  RatioReport r = blank_row(cell_id("scss-dsf", i, family), "scss", "scss-to-dsf");
  const OracleValue a = edge_oracle(src, o.budget);
  const OracleValue b = edge_oracle(red.instance, o.budget);
  r.bound = "OPT(image) == OPT + 2l, 2l = " + to_string(red.parameter_shift);
  if (a.status != OracleStatus::kOk || b.status != OracleStatus::kOk) {
    r.oracle = a.status == OracleStatus::kOk ? b.status : a.status;
    finish(r, r.oracle == OracleStatus::kRefused || a.status == b.status,
           "feasibility differs between source and image", start);
    if (r.oracle == OracleStatus::kRefused) r.detail = "oracle refused";
  } else {
    r.oracle = OracleStatus::kOk;
    r.opt = a.opt;
    r.cost = b.opt;
    finish(r, b.opt == a.opt + red.parameter_shift,
           "image OPT " + to_string(b.opt) + " != " + to_string(a.opt + red.parameter_shift), start);
  }
  cells.rows.push_back(std::move(r));
}

void mcc_mec_row(Cells& cells, int i) {
  const BenchOptions& o = cells.options;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(derive_seed(o.seed, 21, i));
  const Family family = i % 2 == 0 ? Family::kCliqueLike : Family::kRandomGnp;
  GenParams p;
  p.kind = ProblemKind::kMcc;
  p.n = draw_in(rng, 3, o.max_n);
  p.colors = draw_in(rng, 2, std::min(4, p.n));
  p.edge_prob = 0.35;
  const auto src = std::get<MccInstance>(generate(family, p, derive_seed(o.seed, 22, i)).instance);
  const MccToMec red = mcc_to_mec(src);

  RatioReport r = blank_row(cell_id("mcc-mec", i, family), "mcc", "mcc-to-mec");
  r.bound = "clique <=> OPT(mec, k = " + to_string(red.instance.k) + ") <= p = " + to_string(src.p);
  const bool clique = has_multicolored_clique(src);
  try {
    OracleResult m = opt_vertex_subset_mec(red.instance, o.budget);
    r.oracle = m.feasible ? OracleStatus::kOk : OracleStatus::kInfeasible;
    r.opt = m.opt;
    const bool small = m.feasible && m.opt <= src.p;
    finish(r, clique == small,
           std::string("clique ") + (clique ? "present" : "absent") + " but OPT " +
               (m.feasible ? to_string(m.opt) : std::string("infeasible")),
           start);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRefused) throw;
    r.oracle = OracleStatus::kRefused;
    finish(r, true, "", start);
    r.detail = e.what();
  }
  cells.rows.push_back(std::move(r));
}

// (m, l) pairs covered by the set-system rows, cycled by index.
std::pair<int, int> set_system_shape(int i) {
  static const std::vector<std::pair<int, int>> shapes = [] {
    std::vector<std::pair<int, int>> out;
    for (int l = 1; l <= 2; ++l) {
      for (int m = 1; m <= 4; ++m) out.emplace_back(m, l);
    }
    for (int m = 1; m <= 8; ++m) out.emplace_back(m, 3);
    return out;
  }();
  return shapes[i % shapes.size()];
}

void set_system_row(Cells& cells, int i) {
  const BenchOptions& o = cells.options;
  const auto start = std::chrono::steady_clock::now();
  const auto [m, l] = set_system_shape(i);
  RatioReport r = blank_row("setsystem-" + padded(i) + "-m" + to_string(m) + "-l" + to_string(l),
                            "setsystem", "build-set-system");
  r.oracle = OracleStatus::kOk;
  try {
    CertifiedSetSystem built = build_set_system(m, l, derive_seed(o.seed, 31, i));
    r.cost = built.attempts;
    r.opt = built.certificate.collections_checked;
    r.bound = "certified within the retry cap; opt = collections checked, cost = attempts";
    finish(r, built.certificate.valid, "certificate invalid", start);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kConstructionFailed) throw;
    r.bound = "certified within the retry cap";
    finish(r, false, e.what(), start);
  }
  cells.rows.push_back(std::move(r));
}

void projgame_row(Cells& cells, int i) {
  const BenchOptions& o = cells.options;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(derive_seed(o.seed, 41, i));
  GenParams p;
  p.kind = ProblemKind::kProjGame;
  p.left = draw_in(rng, 1, 3);
  p.right = draw_in(rng, 1, 3);
  p.alphabet = draw_in(rng, 1, 3);
  p.satisfiable = true;
  Generated g = generate(Family::kRandomGnp, p, derive_seed(o.seed, 42, i));
  const auto& game = std::get<ProjectionGame>(g.instance);
  const int l = 2;
  CertifiedSetSystem sys = build_set_system(game.alphabet, l, derive_seed(o.seed, 43, i));
  const SetCoverInstance cover = projgame_to_setcover(game, sys.system);
  const CoverCheck chosen = labeling_to_cover(game, sys.system, g.planted_labeling);
  const std::int64_t vertices = game.left + game.right;

  RatioReport r = blank_row("projgame-" + padded(i), "projgame", "projgame-to-setcover");
  r.cost = static_cast<std::int64_t>(chosen.sets.size());
  r.bound = "cover of size |V1|+|V2| = " + to_string(vertices) + "; sets = " +
            to_string(vertices * game.alphabet) + "; universe = |E||B| = " +
            to_string(static_cast<std::int64_t>(game.edges.size()) * sys.system.universe_size());
  std::string failure;
  if (!chosen.covers) failure = "labeling does not cover";
  if (static_cast<std::int64_t>(chosen.sets.size()) != vertices) failure = "cover size mismatch";
  if (static_cast<std::int64_t>(cover.sets.size()) != vertices * game.alphabet) {
    failure = "set count mismatch";
  }
  if (cover.universe_size !=
      static_cast<std::int64_t>(game.edges.size()) * sys.system.universe_size()) {
    failure = "universe size mismatch";
  }
  try {
    CoverResult opt = opt_set_cover(cover, o.budget);
    r.oracle = opt.feasible ? OracleStatus::kOk : OracleStatus::kInfeasible;
    r.opt = opt.opt;
    if (!opt.feasible || opt.opt > vertices) failure = "oracle OPT exceeds |V1|+|V2|";
    if (opt.feasible && opt.opt > 0) r.ratio = static_cast<double>(*r.cost) / opt.opt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRefused) throw;
    r.oracle = OracleStatus::kRefused;
  }
  finish(r, failure.empty(), failure, start);
  cells.rows.push_back(std::move(r));
}

void setcover_row(Cells& cells, int i) {
  const BenchOptions& o = cells.options;
  GenParams p;
  p.kind = ProblemKind::kSetCover;
  p.universe = 12;
  p.sets = 10;
  Instance x = generate(Family::kRandomGnp, p, derive_seed(o.seed, 51, i)).instance;
  cells.add(x, Algo::kSetCoverGreedy, "setcover-" + padded(i));
}

void reductions(Cells& cells, int i) {
  scss_dsf_row(cells, i);
  mcc_mec_row(cells, i);
  set_system_row(cells, i);
  projgame_row(cells, i);
  setcover_row(cells, i);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ stream) ^ index);
}

BenchReport run_bench(const BenchOptions& options) {
  if (options.suite != "figure1" && options.suite != "reductions") {
    fail(ErrorCode::kInput, "unknown suite '" + options.suite + "' (figure1, reductions)");
  }
  if (options.max_n < 3) fail(ErrorCode::kInput, "max-n must be >= 3");
  if (options.count < 0) fail(ErrorCode::kInput, "count must be >= 0");

  Cells cells{options, {}};
  for (int i = 0; i < options.count; ++i) {
    if (options.suite == "figure1") {
      figure1(cells, i);
    } else {
      reductions(cells, i);
    }
  }
  BenchReport report;
  report.options = options;
  report.rows = std::move(cells.rows);
  std::sort(report.rows.begin(), report.rows.end(), [](const RatioReport& a, const RatioReport& b) {
    return std::tie(a.instance_id, a.algorithm) < std::tie(b.instance_id, b.algorithm);
  });
  for (const RatioReport& r : report.rows) {
    if (!r.pass) ++report.failures;
    if (r.oracle == OracleStatus::kRefused) ++report.refused;
  }
  return report;
}

std::string bench_json(const BenchReport& report, bool with_timing) {
  std::string out = "{\"schema\":\"" + std::string(kBenchSchema) + "\",";
  out += "\"suite\":" + nlohmann::json(report.options.suite).dump() + ",";
  out += "\"seed\":" + to_string(report.options.seed) + ",";
  out += "\"max_n\":" + to_string(report.options.max_n) + ",";
  out += "\"count\":" + to_string(report.options.count) + ",";
  out += "\"failures\":" + to_string(report.failures) + ",";
  out += "\"refused\":" + to_string(report.refused) + ",";
  out += "\"rows\":[";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += report_json(report.rows[i], with_timing);
  }
  out += "]}\n";
  return out;
}

std::string bench_text(const BenchReport& report) {
  std::ostringstream os;
  for (const RatioReport& r : report.rows) os << report_text(r) << '\n';
  os << "suite " << report.options.suite << ": " << report.rows.size() << " rows, "
     << report.failures << " hard-bound failures, " << report.refused << " oracle-refused\n";
  return os.str();
}

}  // namespace paramx
