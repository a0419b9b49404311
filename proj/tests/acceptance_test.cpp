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

// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact integer checks; the only tolerances are the wall-time limits below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "paramx/approx.hpp"
#include "paramx/bench.hpp"
#include "paramx/dst.hpp"
#include "paramx/error.hpp"
#include "paramx/flow.hpp"
#include "paramx/fpt_meta.hpp"
#include "paramx/generate.hpp"
#include "paramx/io.hpp"
#include "paramx/oracle.hpp"
#include "paramx/reductions.hpp"

namespace {

using namespace paramx;

constexpr double kLimitScssFpt = 60.0;
constexpr double kLimitLift = 120.0;
constexpr double kLimitDst = 60.0;
constexpr double kLimitFlow = 60.0;
constexpr double kLimitDsn = 60.0;
constexpr double kLimitMec = 60.0;
constexpr double kLimitReductions = 120.0;
constexpr double kLimitSetSystem = 120.0;
constexpr double kLimitCompleteness = 60.0;
constexpr double kLimitDeterminism = 120.0;

constexpr int kScssCorpus = 240;
constexpr int kDstCorpus = 150;
constexpr int kFlowCorpus = 150;
constexpr int kDsnCorpus = 150;
constexpr int kMecCorpus = 150;
constexpr int kScssDsfCorpus = 60;
constexpr int kMccCorpus = 30;
constexpr int kGameCorpus = 30;

constexpr Family kFamilies[] = {Family::kRandomGnp, Family::kLayeredDag, Family::kBidirectedRing,
                                Family::kCliqueLike};

// Collects violations; keeps the first few for the report line.
struct Tally {
  int checks = 0;
  int violations = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (violations++ == 0) first = what;
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

int run(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit;
  const bool pass = o.pass && in_time;
  std::printf("criterion %d [%s] %s: %s; %.2f s (limit %.0f s)%s\n", id, pass ? "PASS" : "FAIL",
              name, o.detail.c_str(), secs, limit, in_time ? "" : " TIME EXCEEDED");
  std::fflush(stdout);
  return pass ? 0 : 1;
}

std::string summary(const Tally& t, int instances) {
  std::ostringstream os;
  os << instances << " instances, " << t.checks << " checks, " << t.violations << " violations";
  if (t.violations > 0) os << " (first: " << t.first << ")";
  return os.str();
}

template <typename X>
X make(ProblemKind kind, GenParams p, int i, std::uint64_t stream) {
  p.kind = kind;
  return std::get<X>(generate(kFamilies[i % 4], p, derive_seed(2026, stream, i)).instance);
}

std::vector<ScssInstance> scss_corpus() {
  std::vector<ScssInstance> out;
  for (int i = 0; i < kScssCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 6;
    p.terminals = 2 + (i / 4) % 3;
    p.max_edges = 8;
    out.push_back(make<ScssInstance>(ProblemKind::kScss, p, i, 1));
  }
  return out;
}

Outcome criterion_scss_fpt(const std::vector<ScssInstance>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ScssInstance& x = corpus[i];
    OracleResult opt = opt_edge_subset(x);
    t.expect(opt.feasible, "instance " + std::to_string(i) + " infeasible");
    if (!opt.feasible) continue;
    for (std::int64_t p : {opt.opt - 1, opt.opt, opt.opt + 1, 2 * opt.opt}) {
      if (p < 0) continue;
      ApproxOutcome o = scss_fpt(x, p);
      const std::string where = "instance " + std::to_string(i) + " p=" + std::to_string(p);
      if (p >= opt.opt) {
        t.expect(!o.solution.rejected(), where + " rejected");
        if (!o.solution.rejected()) t.expect(o.solution.cost <= 2 * opt.opt, where + " cost > 2*OPT");
      }
      if (!o.solution.rejected()) {
        t.expect(o.solution.cost <= 2 * p, where + " cost > 2p");
        t.expect(is_feasible(x, o.solution.items), where + " infeasible output");
      }
    }
  }
  return {t.violations == 0 && corpus.size() >= 200, summary(t, static_cast<int>(corpus.size()))};
}

Outcome criterion_lift(const std::vector<ScssInstance>& corpus) {
  Tally t;
  NormalizedFptApprox<ScssInstance> algo(
      [](const ScssInstance& x, std::int64_t k) { return scss_fpt(x, k).solution; },
      [](std::int64_t) { return 2.0; });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ScssInstance& x = corpus[i];
    const std::int64_t opt = opt_edge_subset(x).opt;
    LiftResult r = lift_to_optimum_approx(algo, x, 64);
    const std::string where = "instance " + std::to_string(i);
    t.expect(r.k <= opt, where + " k > OPT");
    t.expect(r.calls == r.k, where + " calls != k");
    t.expect(r.solution.cost <= 2 * opt, where + " cost > OPT*rho(OPT)");
  }
  return {t.violations == 0 && corpus.size() >= 200, summary(t, static_cast<int>(corpus.size()))};
}

Outcome criterion_dst() {
  Tally t;
  for (int i = 0; i < kDstCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 6;
    p.terminals = 1 + (i / 4) % 3;
    p.max_edges = 8;
    p.max_weight = 1 + (i / 12) % 3;
    auto x = make<DstInstance>(ProblemKind::kDst, p, i, 2);
    const std::int64_t opt = opt_edge_subset(x).opt;
    Solution s = dst_exact(x);
    t.expect(s.cost == opt && is_feasible(x, s.items),
             "instance " + std::to_string(i) + ": exact " + std::to_string(s.cost) + " vs oracle " +
                 std::to_string(opt));
  }
  return {t.violations == 0, summary(t, kDstCorpus)};
}

Outcome criterion_flow() {
  Tally t;
  for (int i = 0; i < kFlowCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 6;
    p.pairs = 1;
    p.max_demand = 2;
    p.max_edges = 8;
    p.max_weight = 1 + (i / 12) % 3;
    auto x = make<DsnInstance>(ProblemKind::kDsn, p, i, 3);
    const DemandPair& d = x.pairs.front();
    const std::int64_t opt = opt_edge_subset(x).opt;
    DisjointPathsResult r = min_cost_disjoint_paths(x.graph, d.source, d.sink, d.demand);
    t.expect(r.feasible && r.cost == opt,
             "instance " + std::to_string(i) + ": flow " + std::to_string(r.cost) + " vs oracle " +
                 std::to_string(opt));
  }
  return {t.violations == 0, summary(t, kFlowCorpus)};
}

Outcome criterion_dsn() {
  Tally t;
  for (int i = 0; i < kDsnCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 6;
    p.pairs = 1 + (i / 4) % 2;
    p.max_demand = 2;
    p.max_edges = 8;
    auto x = make<DsnInstance>(ProblemKind::kDsn, p, i, 4);
    const std::int64_t opt = opt_edge_subset(x).opt;
    ApproxOutcome o = dsn_approx(x);
    const std::string where = "instance " + std::to_string(i);
    Weight sum = 0;
    for (const Subcall& c : o.subcalls) {
      t.expect(c.cost <= opt, where + " |E_vx| > OPT");
      sum += c.cost;
    }
    t.expect(o.solution.cost <= sum, where + " cost > sum |E_vx|");
    t.expect(o.solution.cost <= static_cast<std::int64_t>(x.pairs.size()) * opt,
             where + " ratio > #pairs");
    t.expect(is_feasible(x, o.solution.items), where + " infeasible output");
  }
  return {t.violations == 0, summary(t, kDsnCorpus)};
}

Outcome criterion_mec() {
  Tally t;
  for (int i = 0; i < kMecCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 6;
    p.edge_prob = 0.4;
    auto x = make<MecInstance>(ProblemKind::kMec, p, i, 5);
    if (x.graph.num_edges() < x.k) continue;
    const std::int64_t opt = opt_vertex_subset_mec(x).opt;
    ApproxOutcome o = mec_approx(x);
    const std::string where = "instance " + std::to_string(i);
    t.expect(o.solution.cost <= 2 * x.k, where + " |S| > 2k");
    t.expect(o.solution.cost <= opt * (opt - 1), where + " |S| > OPT(OPT-1)");
    t.expect(is_feasible(x, o.solution.items), where + " too few induced edges");
  }
  const MecInstance star{DiGraph(4, {{0, 1}, {0, 2}, {0, 3}}), 3, {}};
  const MecInstance tri{DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}), 3, {}};
  t.expect(opt_vertex_subset_mec(star).opt == 4, "star OPT != 4");
  t.expect(mec_approx(star).solution.cost == 4, "star approx != 4");
  t.expect(opt_vertex_subset_mec(tri).opt == 3, "triangle OPT != 3");
  t.expect(mec_approx(tri).solution.cost == 3, "triangle approx != 3");
  return {t.violations == 0, summary(t, kMecCorpus) + ", star OPT 4 and triangle OPT 3 checked"};
}

Outcome criterion_reductions() {
  Tally t;
  int scss = 0;
  for (int i = 0; i < kScssDsfCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 5;
    p.terminals = 2 + (i / 4) % 2;
    p.max_edges = 2;
    auto x = make<ScssInstance>(ProblemKind::kScss, p, i, 6);
    ScssToDsf red = scss_to_dsf(x);
    const std::int64_t a = opt_edge_subset(x).opt;
    const std::int64_t b = opt_edge_subset(red.instance).opt;
    t.expect(b == a + red.parameter_shift, "scss " + std::to_string(i) + ": image OPT " +
                                               std::to_string(b) + " != " + std::to_string(a) +
                                               " + " + std::to_string(red.parameter_shift));
    ++scss;
  }
  int cliques = 0;
  for (int i = 0; i < kMccCorpus; ++i) {
    GenParams p;
    p.n = 3 + i % 6;
    p.colors = 2 + (i / 2) % std::min(3, p.n - 1);
    p.edge_prob = 0.35;
    p.kind = ProblemKind::kMcc;
    const Family f = i % 2 == 0 ? Family::kCliqueLike : Family::kRandomGnp;
    auto x = std::get<MccInstance>(generate(f, p, derive_seed(2026, 7, i)).instance);
    MccToMec red = mcc_to_mec(x);
    OracleResult m = opt_vertex_subset_mec(red.instance);
    const bool clique = has_multicolored_clique(x);
    cliques += clique;
    t.expect(clique == (m.feasible && m.opt <= x.p), "mcc " + std::to_string(i) + " disagrees");
  }
  std::ostringstream os;
  os << scss << " SCSS->DSF instances, " << kMccCorpus << " colored graphs (" << cliques
     << " with a multicolored clique); " << summary(t, scss + kMccCorpus);
  return {t.violations == 0 && scss >= 50 && kMccCorpus >= 20, os.str()};
}

Outcome criterion_set_system() {
  Tally t;
  int built = 0;
  auto attempt = [&](int m, int l) {
    const std::string where = "(m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")";
    try {
      CertifiedSetSystem s = build_set_system(m, l, derive_seed(2026, 8, m * 10 + l));
      t.expect(s.certificate.valid && verify_set_system(s.system).valid, where + " not certified");
      t.expect(s.attempts <= 16, where + " exceeded retry cap");
      ++built;
    } catch (const Error& e) {
      t.expect(false, where + " " + e.what());
    }
  };
  for (int l = 1; l <= 2; ++l) {
    for (int m = 1; m <= 4; ++m) attempt(m, l);
  }
  for (int m = 1; m <= 8; ++m) attempt(m, 3);
  SetSystem fake(1, 8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  t.expect(!verify_set_system(fake).valid, "C1 = B fake accepted");
  std::ostringstream os;
  os << built << " of 16 shapes certified, C1 = B fake rejected; " << t.checks << " checks, "
     << t.violations << " violations";
  if (t.violations > 0) os << " (first: " << t.first << ")";
  return {t.violations == 0, os.str()};
}

Outcome criterion_completeness() {
  Tally t;
  int games = 0;
  auto check = [&](const ProjectionGame& g, const std::vector<int>& labeling, int index) {
    const std::string where = "game " + std::to_string(index);
    CertifiedSetSystem sys = build_set_system(g.alphabet, 2, derive_seed(2026, 9, index));
    SetCoverInstance cover = projgame_to_setcover(g, sys.system);
    const std::int64_t vertices = g.left + g.right;
    CoverCheck c = labeling_to_cover(g, sys.system, labeling);
    t.expect(c.covers, where + " labeling does not cover");
    t.expect(static_cast<std::int64_t>(c.sets.size()) == vertices, where + " cover size");
    t.expect(static_cast<std::int64_t>(cover.sets.size()) == vertices * g.alphabet, where + " set count");
    t.expect(cover.universe_size ==
                 static_cast<std::int64_t>(g.edges.size()) * sys.system.universe_size(),
             where + " universe size");
    CoverResult opt = opt_set_cover(cover);
    t.expect(opt.feasible && opt.opt <= vertices, where + " OPT > |V1|+|V2|");
    ++games;
  };
  // Hand-built games with identity projections.
  for (int sigma = 1; sigma <= 3; ++sigma) {
    for (int side = 1; side <= 3; ++side) {
      ProjectionGame g;
      g.left = side;
      g.right = side;
      g.alphabet = sigma;
      for (int a = 0; a < side; ++a) {
        g.edges.emplace_back(a, a);
        std::vector<int> id(sigma);
        for (int y = 0; y < sigma; ++y) id[y] = y;
        g.projection.push_back(id);
      }
      check(g, std::vector<int>(2 * side, sigma - 1), games);
    }
  }
  for (int i = 0; games < kGameCorpus; ++i) {
    GenParams p;
    p.kind = ProblemKind::kProjGame;
    p.left = 1 + i % 3;
    p.right = 1 + (i / 3) % 3;
    p.alphabet = 1 + (i / 9) % 3;
    p.edge_prob = 0.5;
    Generated g = generate(Family::kRandomGnp, p, derive_seed(2026, 10, i));
    check(std::get<ProjectionGame>(g.instance), g.planted_labeling, games);
  }
  return {t.violations == 0 && games >= 20, summary(t, games)};
}

Outcome criterion_determinism() {
  BenchOptions o;
  o.max_n = 8;
  o.count = 20;
  o.seed = 7;
  const BenchReport first = run_bench(o);
  const std::string a = bench_json(first);
  const std::string b = bench_json(run_bench(o));
  o.suite = "reductions";
  const std::string c = bench_json(run_bench(o));
  const std::string d = bench_json(run_bench(o));
  std::ostringstream os;
  os << "figure1 " << a.size() << " bytes " << (a == b ? "identical" : "DIFFERENT") << " ("
     << first.rows.size() << " rows, " << first.failures << " hard-bound failures), reductions "
     << c.size() << " bytes " << (c == d ? "identical" : "DIFFERENT");
  return {a == b && c == d, os.str()};
}

}  // namespace

int main() {
  int failed = 0;
  const std::vector<ScssInstance> corpus = scss_corpus();
  failed += run(1, "scss_fpt 2-approximation", kLimitScssFpt, [&] { return criterion_scss_fpt(corpus); });
  failed += run(2, "lift to optimum approximation", kLimitLift, [&] { return criterion_lift(corpus); });
  failed += run(3, "dst_exact equals oracle", kLimitDst, criterion_dst);
  failed += run(4, "min-cost disjoint paths equal oracle", kLimitFlow, criterion_flow);
  failed += run(5, "DSN per-pair bound", kLimitDsn, criterion_dsn);
  failed += run(6, "MEC bound", kLimitMec, criterion_mec);
  failed += run(7, "reduction OPT correspondence", kLimitReductions, criterion_reductions);
  failed += run(8, "set-system verifier", kLimitSetSystem, criterion_set_system);
  failed += run(9, "reduction completeness", kLimitCompleteness, criterion_completeness);
  failed += run(10, "bench determinism", kLimitDeterminism, criterion_determinism);
  std::printf("acceptance: %d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
