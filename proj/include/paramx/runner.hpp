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

#ifndef PARAMX_RUNNER_HPP_
#define PARAMX_RUNNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "paramx/approx.hpp"
#include "paramx/instance.hpp"
#include "paramx/oracle.hpp"

namespace paramx {

enum class Algo {
  kScssPoly,
  kScssFpt,
  kScssFptLift,
  kDsf,
  kDsn,
  kMec,
  kDstExact,
  kDstGreedy,
  kSetCoverGreedy,
};

std::optional<Algo> algo_from_name(std::string_view name);
std::string_view algo_name(Algo algo);

struct SolveOptions {
  int levels = 2;
  std::optional<std::int64_t> parameter;  // scss-fpt p; falls back to the instance's p
  std::optional<std::uint64_t> seed;      // mec: random edge choice
  bool all_hubs = false;
};

struct SolveResult {
  Algo algo = Algo::kScssPoly;
  ApproxOutcome outcome;
  std::optional<std::int64_t> parameter;  // p actually used by scss-fpt
  std::int64_t lifted_k = 0;              // scss-fpt-lift: first accepting k
  std::int64_t calls = 0;                 // scss-fpt-lift: inner invocations
};

// Runs `algo` on `instance`. Throws Error{kInput} on a kind mismatch or a
// missing parameter, Error{kInfeasible} when no solution exists.
SolveResult run_algorithm(const Instance& instance, Algo algo, const SolveOptions& options = {});

std::string solution_json(const Instance& instance, const SolveResult& result);
std::string solution_text(const Instance& instance, const SolveResult& result);

enum class OracleStatus { kOk, kRefused, kInfeasible };

struct RatioReport {
  std::string instance_id;
  std::string problem;
  std::string algorithm;
  OracleStatus oracle = OracleStatus::kRefused;
  std::int64_t opt = 0;          // valid when oracle == kOk
  std::string outcome;           // "solution", "reject" or "infeasible"
  std::optional<std::int64_t> cost;
  std::optional<double> ratio;   // cost / OPT
  std::string bound;             // instantiated bound
  bool hard = false;             // bound is asserted, not just recorded
  bool pass = false;
  std::string detail;            // first violated check, if any
  double wall_ms = 0;
};

std::string_view oracle_status_name(OracleStatus status);

// Solves, runs the matching oracle and applies the algorithm's pass rule.
// For scss-fpt without a parameter, p = OPT.
RatioReport evaluate(const Instance& instance, Algo algo, const SolveOptions& options,
                     const OracleBudget& budget, std::string instance_id);

std::string report_json(const RatioReport& report, bool with_timing);
std::string report_text(const RatioReport& report);

}  // namespace paramx

#endif  // PARAMX_RUNNER_HPP_
