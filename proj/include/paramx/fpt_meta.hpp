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

#ifndef PARAMX_FPT_META_HPP_
#define PARAMX_FPT_META_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "paramx/error.hpp"
#include "paramx/instance.hpp"

namespace paramx {

enum class Goal { kMinimize, kMaximize };

using RhoFunction = std::function<double(std::int64_t)>;

struct RhoShapeReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Checks rho(k) >= 1 on [k_from, k_to] and the shape condition: k*rho(k)
// nondecreasing for minimization; k/rho(k) nondecreasing and strictly
// increasing somewhere in range for maximization (a finite stand-in for
// "unbounded").
RhoShapeReport check_rho_shape(const RhoFunction& rho, Goal goal, std::int64_t k_from,
                               std::int64_t k_to);

// True when `cost` meets the (x, k) guarantee: cost <= k*rho(k) for
// minimization, cost >= k/rho(k) for maximization.
bool within_guarantee(std::int64_t cost, std::int64_t k, double rho_k, Goal goal);

// Wraps an FPT approximation so every answer either satisfies its
// guarantee for the given k or is Reject. An optional feasibility check
// also downgrades infeasible outputs.
template <typename Problem>
class NormalizedFptApprox {
 public:
  using Algorithm = std::function<Solution(const Problem&, std::int64_t)>;
  using Feasibility = std::function<bool(const Problem&, const Solution&)>;

  NormalizedFptApprox(Algorithm algorithm, RhoFunction rho, Goal goal = Goal::kMinimize,
                      Feasibility feasible = {})
      : algorithm_(std::move(algorithm)),
        rho_(std::move(rho)),
        goal_(goal),
        feasible_(std::move(feasible)) {
    RhoShapeReport shape = check_rho_shape(rho_, goal_, 1, 64);
    if (!shape.pass) fail(ErrorCode::kInput, "ratio function rejected: " + shape.failures.front());
  }

  Solution operator()(const Problem& x, std::int64_t k) const {
    Solution s = algorithm_(x, k);
    if (s.rejected()) return s;
    if (!within_guarantee(s.cost, k, rho_(k), goal_) || (feasible_ && !feasible_(x, s))) {
      return Solution::reject(s.producer);
    }
    return s;
  }

  [[nodiscard]] double rho(std::int64_t k) const { return rho_(k); }
  [[nodiscard]] Goal goal() const { return goal_; }

 private:
  Algorithm algorithm_;
  RhoFunction rho_;
  Goal goal_;
  Feasibility feasible_;
};

struct LiftResult {
  Solution solution;
  std::int64_t k = 0;      // first accepting parameter
  std::int64_t calls = 0;  // inner invocations, equal to k
};

// Runs the wrapped algorithm on k = 1, 2, ... and returns the first
// accepted answer. Minimization only. Throws Error{kExhausted} if nothing is
// accepted up to k_cap.
template <typename Problem>
LiftResult lift_to_optimum_approx(const NormalizedFptApprox<Problem>& algo, const Problem& x,
                                  std::int64_t k_cap) {
  if (algo.goal() != Goal::kMinimize) {
    fail(ErrorCode::kInput, "lift_to_optimum_approx: only minimization problems");
  }
  LiftResult result;
  for (std::int64_t k = 1; k <= k_cap; ++k) {
    ++result.calls;
    Solution s = algo(x, k);
    if (!s.rejected()) {
      result.solution = std::move(s);
      result.k = k;
      return result;
    }
  }
  fail(ErrorCode::kExhausted, "no acceptance for k = 1.." + std::to_string(k_cap));
}

}  // namespace paramx

#endif  // PARAMX_FPT_META_HPP_
