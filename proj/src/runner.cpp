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

#include "paramx/runner.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "paramx/dst.hpp"
#include "paramx/error.hpp"
#include "paramx/fpt_meta.hpp"
#include "paramx/reductions.hpp"

namespace paramx {
namespace {

using std::to_string;

struct AlgoName {
  Algo algo;
  std::string_view name;
};

constexpr std::array<AlgoName, 9> kAlgoNames = {{
    {Algo::kScssPoly, "scss-poly"},
    {Algo::kScssFpt, "scss-fpt"},
    {Algo::kScssFptLift, "scss-fpt-lift"},
    {Algo::kDsf, "dsf"},
    {Algo::kDsn, "dsn"},
    {Algo::kMec, "mec"},
    {Algo::kDstExact, "dst-exact"},
    {Algo::kDstGreedy, "dst-greedy"},
    {Algo::kSetCoverGreedy, "setcover-greedy"},
}};

template <typename T>
const T& expect(const Instance& instance, Algo algo, std::string_view kind) {
  const T* x = std::get_if<T>(&instance);
  if (x == nullptr) {
    fail(ErrorCode::kInput, std::string(algo_name(algo)) + " expects a " + std::string(kind) +
                                " instance, got " + std::string(kind_name(instance)));
  }
  return *x;
}

std::int64_t total_cost(const DiGraph& g) {
  std::int64_t sum = 0;
  for (const Edge& e : g.edges()) sum += e.weight;
  return sum;
}

bool solution_feasible(const Instance& instance, const Solution& s) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MecInstance>) {
          return s.kind == Solution::Kind::kVertexSet && is_feasible(x, s.items);
        } else if constexpr (std::is_same_v<T, SetCoverInstance>) {
          return s.kind == Solution::Kind::kSetCollection && is_cover(x, s.items);
        } else if constexpr (std::is_same_v<T, MccInstance> || std::is_same_v<T, ProjectionGame>) {
          return false;
        } else {
          return s.kind == Solution::Kind::kEdgeSet && is_feasible(x, s.items);
        }
      },
      instance);
}

struct OracleOutcome {
  OracleStatus status = OracleStatus::kRefused;
  std::int64_t opt = 0;
  std::string note;
};

OracleOutcome run_oracle(const Instance& instance, const OracleBudget& budget) {
  OracleOutcome out;
  try {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, MccInstance> || std::is_same_v<T, ProjectionGame>) {
            out.note = "no oracle for this kind";
          } else if constexpr (std::is_same_v<T, SetCoverInstance>) {
            CoverResult r = opt_set_cover(x, budget);
            out.status = r.feasible ? OracleStatus::kOk : OracleStatus::kInfeasible;
            out.opt = r.opt;
          } else {
            OracleResult r;
            if constexpr (std::is_same_v<T, MecInstance>) {
              r = opt_vertex_subset_mec(x, budget);
            } else {
              r = opt_edge_subset(x, budget);
            }
            out.status = r.feasible ? OracleStatus::kOk : OracleStatus::kInfeasible;
            out.opt = r.opt;
          }
        },
        instance);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRefused) throw;
    out.status = OracleStatus::kRefused;
    out.note = e.what();
  }
  return out;
}

ApproxOutcome wrap(Solution s, std::string bound) {
  ApproxOutcome out;
  out.solution = std::move(s);
  out.claimed_bound = std::move(bound);
  return out;
}

std::string item_text(const Instance& instance, const Solution& s) {
  std::ostringstream os;
  const DiGraph* g = std::visit(
      [](const auto& x) -> const DiGraph* {
        if constexpr (requires { x.graph; }) {
          return &x.graph;
        } else {
          return nullptr;
        }
      },
      instance);
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i > 0) os << ' ';
    if (s.kind == Solution::Kind::kEdgeSet && g != nullptr) {
      const Edge& e = g->edge(s.items[i]);
      os << e.tail << "->" << e.head;
    } else {
      os << s.items[i];
    }
  }
  return os.str();
}

std::string_view solution_kind_name(Solution::Kind kind) {
  switch (kind) {
    case Solution::Kind::kEdgeSet:
      return "edges";
    case Solution::Kind::kVertexSet:
      return "vertices";
    case Solution::Kind::kSetCollection:
      return "sets";
    case Solution::Kind::kReject:
      return "reject";
  }
  return "reject";
}

}  // namespace

std::optional<Algo> algo_from_name(std::string_view name) {
  for (const AlgoName& a : kAlgoNames) {
    if (a.name == name) return a.algo;
  }
  return std::nullopt;
}

std::string_view algo_name(Algo algo) {
  for (const AlgoName& a : kAlgoNames) {
    if (a.algo == algo) return a.name;
  }
  return "unknown";
}

std::string_view oracle_status_name(OracleStatus status) {
  switch (status) {
    case OracleStatus::kOk:
      return "ok";
    case OracleStatus::kRefused:
      return "refused";
    case OracleStatus::kInfeasible:
      return "infeasible";
  }
  return "refused";
}

SolveResult run_algorithm(const Instance& instance, Algo algo, const SolveOptions& options) {
  validate(instance);
  SolveResult result;
  result.algo = algo;
  ApproxConfig cfg;
  cfg.greedy.levels = options.levels;
  cfg.try_all_hubs = options.all_hubs;
  cfg.mec_seed = options.seed;
  if (options.levels < 1) fail(ErrorCode::kInput, "levels must be >= 1");

  switch (algo) {
    case Algo::kScssPoly:
      result.outcome = scss_poly(expect<ScssInstance>(instance, algo, "scss"), cfg);
      break;
    case Algo::kScssFpt: {
      const auto& x = expect<ScssInstance>(instance, algo, "scss");
      std::optional<std::int64_t> p = options.parameter ? options.parameter : x.parameter;
      if (!p) fail(ErrorCode::kInput, "scss-fpt needs a parameter p (--param or \"p\" in the file)");
      if (*p < 0) fail(ErrorCode::kInput, "scss-fpt: p must be >= 0");
      result.parameter = p;
      result.outcome = scss_fpt(x, *p, cfg);
      break;
    }
    case Algo::kScssFptLift: {
      const auto& x = expect<ScssInstance>(instance, algo, "scss");
      NormalizedFptApprox<ScssInstance> inner(
          [cfg](const ScssInstance& y, std::int64_t k) { return scss_fpt(y, k, cfg).solution; },
          [](std::int64_t) { return 2.0; }, Goal::kMinimize,
          [](const ScssInstance& y, const Solution& s) { return is_feasible(y, s.items); });
      LiftResult lift = lift_to_optimum_approx(inner, x, std::max<std::int64_t>(1, total_cost(x.graph)));
      result.lifted_k = lift.k;
      result.calls = lift.calls;
      result.outcome = wrap(std::move(lift.solution),
                            "first accepting k = " + to_string(lift.k) + " <= OPT; cost <= 2k = " +
                                to_string(2 * lift.k));
      break;
    }
    case Algo::kDsf:
      result.outcome = dsf_approx(expect<DsfInstance>(instance, algo, "dsf"), cfg);
      break;
    case Algo::kDsn:
      result.outcome = dsn_approx(expect<DsnInstance>(instance, algo, "dsn"), cfg);
      break;
    case Algo::kMec:
      result.outcome = mec_approx(expect<MecInstance>(instance, algo, "mec"), cfg);
      break;
    case Algo::kDstExact:
      result.outcome = wrap(dst_exact(expect<DstInstance>(instance, algo, "dst")), "cost == OPT");
      break;
    case Algo::kDstGreedy: {
      const auto& x = expect<DstInstance>(instance, algo, "dst");
      result.outcome = wrap(dst_recursive_greedy(x, cfg.greedy),
                            "cost <= i^2 * |T|^(1/i) * OPT envelope, i = " + to_string(options.levels));
      break;
    }
    case Algo::kSetCoverGreedy: {
      const auto& x = expect<SetCoverInstance>(instance, algo, "setcover");
      result.outcome = wrap(Solution::set_collection(greedy_set_cover(x), "setcover-greedy"),
                            "|C| <= H(|U|) * OPT envelope");
      break;
    }
  }
  return result;
}

std::string solution_json(const Instance& instance, const SolveResult& result) {
  const Solution& s = result.outcome.solution;
  nlohmann::ordered_json j;
  j["algorithm"] = algo_name(result.algo);
  j["outcome"] = s.rejected() ? "reject" : "solution";
  if (!s.rejected()) {
    j["kind"] = solution_kind_name(s.kind);
    j["items"] = s.items;
    j["cost"] = s.cost;
  }
  j["producer"] = s.producer;
  if (result.parameter) j["p"] = *result.parameter;
  if (result.algo == Algo::kScssFptLift) {
    j["k"] = result.lifted_k;
    j["calls"] = result.calls;
  }
  j["bound"] = result.outcome.claimed_bound;
  if (!result.outcome.diagnosis.empty()) j["diagnosis"] = result.outcome.diagnosis;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const Subcall& c : result.outcome.subcalls) {
    subs.push_back({{"label", c.label}, {"edges", c.edges}, {"cost", c.cost}});
  }
  j["subcalls"] = std::move(subs);
  (void)instance;
  return j.dump() + "\n";
}

std::string solution_text(const Instance& instance, const SolveResult& result) {
  const Solution& s = result.outcome.solution;
  std::ostringstream os;
  os << "algorithm: " << algo_name(result.algo) << '\n';
  if (s.rejected()) {
    os << "outcome: reject\n";
  } else {
    os << "outcome: solution\n";
    os << "cost: " << s.cost << '\n';
    os << solution_kind_name(s.kind) << ": " << item_text(instance, s) << '\n';
  }
  if (result.parameter) os << "p: " << *result.parameter << '\n';
  if (result.algo == Algo::kScssFptLift) {
    os << "k: " << result.lifted_k << " (calls " << result.calls << ")\n";
  }
  if (!result.outcome.claimed_bound.empty()) os << "bound: " << result.outcome.claimed_bound << '\n';
  if (!result.outcome.diagnosis.empty()) os << "diagnosis: " << result.outcome.diagnosis << '\n';
  for (const Subcall& c : result.outcome.subcalls) {
    os << "  " << c.label << ": cost " << c.cost << '\n';
  }
  return os.str();
}

RatioReport evaluate(const Instance& instance, Algo algo, const SolveOptions& options,
                     const OracleBudget& budget, std::string instance_id) {
  const auto start = std::chrono::steady_clock::now();
  RatioReport r;
  r.instance_id = std::move(instance_id);
  r.problem = kind_name(instance);
  r.algorithm = algo_name(algo);

  OracleOutcome oracle = run_oracle(instance, budget);
  r.oracle = oracle.status;
  r.opt = oracle.opt;
  const bool known = oracle.status == OracleStatus::kOk;

  SolveOptions opts = options;
  if (algo == Algo::kScssFpt && !opts.parameter) {
    const auto* x = std::get_if<ScssInstance>(&instance);
    if (x != nullptr && !x->parameter) {
      opts.parameter = known ? oracle.opt : total_cost(x->graph);
    }
  }

  SolveResult res;
  bool infeasible = false;
  bool exhausted = false;
  try {
    res = run_algorithm(instance, algo, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) {
      infeasible = true;
    } else if (e.code() == ErrorCode::kExhausted) {
      exhausted = true;
    } else {
      throw;
    }
  }
  const Solution& s = res.outcome.solution;
  const bool rejected = !infeasible && (exhausted || s.rejected());
  const bool solved = !infeasible && !rejected;
  r.outcome = infeasible ? "infeasible" : rejected ? "reject" : "solution";
  if (solved) {
    r.cost = s.cost;
    if (known && oracle.opt > 0) r.ratio = static_cast<double>(s.cost) / oracle.opt;
  }

  std::vector<std::string> failures;
  auto check = [&](bool ok, std::string what) {
    if (!ok) failures.push_back(std::move(what));
  };

  if (solved) {
    check(solution_feasible(instance, s), "infeasible output");
    if (known) check(s.cost >= oracle.opt, "cost below oracle OPT");
    check(oracle.status != OracleStatus::kInfeasible, "solution on an infeasible instance");
  }
  if (infeasible) {
    check(oracle.status != OracleStatus::kOk, "reported infeasible but OPT = " + to_string(oracle.opt));
  }
  if (rejected && algo != Algo::kScssFpt) {
    check(oracle.status != OracleStatus::kOk, "no acceptance although OPT = " + to_string(oracle.opt));
  }

  const std::string opt_text = known ? to_string(oracle.opt) : "?";
  switch (algo) {
    case Algo::kScssFpt: {
      r.hard = true;
      const std::int64_t p = res.parameter.value_or(opts.parameter.value_or(0));
      r.bound = "accept if p >= OPT; cost <= 2*min(p, OPT) with p = " + to_string(p) +
                ", OPT = " + opt_text;
      if (solved) check(s.cost <= 2 * p, "accepted with cost > 2p");
      if (known && p >= oracle.opt) {
        check(solved, "rejected although p >= OPT");
        if (solved) check(s.cost <= 2 * oracle.opt, "cost > 2*OPT");
      }
      break;
    }
    case Algo::kScssFptLift:
      r.hard = true;
      r.bound = "k <= OPT, calls == k, cost <= 2*OPT = " +
                (known ? to_string(2 * oracle.opt) : std::string("?"));
      if (solved) {
        check(res.calls == res.lifted_k, "calls != k");
        if (known) {
          check(res.lifted_k <= oracle.opt, "first accepting k > OPT");
          check(s.cost <= 2 * oracle.opt, "cost > 2*OPT");
        }
      }
      break;
    case Algo::kDstExact:
      r.hard = true;
      r.bound = "cost == OPT = " + opt_text;
      if (solved && known) check(s.cost == oracle.opt, "cost != OPT");
      break;
    case Algo::kDsn: {
      r.hard = true;
      std::int64_t sum = 0;
      std::int64_t widest = 0;
      for (const Subcall& c : res.outcome.subcalls) {
        sum += c.cost;
        widest = std::max<std::int64_t>(widest, c.cost);
      }
      r.bound = "each |E_vx| <= OPT = " + opt_text + "; cost <= sum |E_vx| = " + to_string(sum);
      if (solved) {
        check(s.cost <= sum, "cost > sum |E_vx|");
        if (known) check(widest <= oracle.opt, "some |E_vx| > OPT");
      }
      break;
    }
    case Algo::kMec: {
      r.hard = true;
      const auto& x = std::get<MecInstance>(instance);
      r.bound = "|S| <= 2k = " + to_string(2 * x.k) + "; |S| <= OPT(OPT-1) = " +
                (known ? to_string(oracle.opt * (oracle.opt - 1)) : std::string("?"));
      if (solved) {
        check(s.cost <= 2 * x.k, "|S| > 2k");
        if (known) check(s.cost <= oracle.opt * (oracle.opt - 1), "|S| > OPT(OPT-1)");
      }
      break;
    }
    case Algo::kScssPoly:
    case Algo::kDsf:
    case Algo::kDstGreedy:
    case Algo::kSetCoverGreedy:
      r.hard = false;
      r.bound = "feasible; ratio recorded against " + res.outcome.claimed_bound;
      if (res.outcome.claimed_bound.empty()) r.bound = "feasible; ratio recorded";
      break;
  }

  r.pass = failures.empty();
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i > 0) r.detail += "; ";
    r.detail += failures[i];
  }
  if (r.detail.empty() && oracle.status == OracleStatus::kRefused) r.detail = oracle.note;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string report_json(const RatioReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance_id;
  j["problem"] = r.problem;
  j["algorithm"] = r.algorithm;
  j["oracle"] = oracle_status_name(r.oracle);
  if (r.oracle == OracleStatus::kOk) {
    j["opt"] = r.opt;
  } else {
    j["opt"] = nullptr;
  }
  j["outcome"] = r.outcome;
  j["cost"] = r.cost ? nlohmann::ordered_json(*r.cost) : nlohmann::ordered_json(nullptr);
  j["ratio"] = r.ratio ? nlohmann::ordered_json(*r.ratio) : nlohmann::ordered_json(nullptr);
  j["bound"] = r.bound;
  j["hard"] = r.hard;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j.dump();
}

std::string report_text(const RatioReport& r) {
  std::ostringstream os;
  const char* status = !r.pass ? "FAIL" : r.oracle == OracleStatus::kRefused ? "REFUSED" : "PASS";
  os << status << "  " << r.instance_id << "  " << r.algorithm << "  opt="
     << (r.oracle == OracleStatus::kOk ? to_string(r.opt) : std::string(oracle_status_name(r.oracle)))
     << "  " << r.outcome;
  if (r.cost) os << " cost=" << *r.cost;
  if (r.ratio) {
    os.setf(std::ios::fixed);
    os.precision(3);
    os << " ratio=" << *r.ratio;
  }
  os << "  [" << (r.hard ? "hard" : "envelope") << "] " << r.bound;
  if (!r.detail.empty()) os << "  (" << r.detail << ")";
  return os.str();
}

}  // namespace paramx
