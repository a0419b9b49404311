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

#include "paramx/fpt_meta.hpp"

#include <cmath>

namespace paramx {

RhoShapeReport check_rho_shape(const RhoFunction& rho, Goal goal, std::int64_t k_from,
                               std::int64_t k_to) {
  RhoShapeReport report;
  auto note = [&](std::string what) {
    report.pass = false;
    report.failures.push_back(std::move(what));
  };
  bool strictly_increasing_somewhere = false;
  double previous = 0;
  for (std::int64_t k = k_from; k <= k_to; ++k) {
    const double r = rho(k);
    if (!std::isfinite(r) || r < 1.0) {
      note("rho(" + std::to_string(k) + ") = " + std::to_string(r) + " is below 1");
      continue;
    }
    const double shape = goal == Goal::kMinimize ? static_cast<double>(k) * r
                                                 : static_cast<double>(k) / r;
    if (k > k_from) {
      if (shape < previous) {
        note(std::string(goal == Goal::kMinimize ? "k*rho(k)" : "k/rho(k)") + " decreases at k = " +
             std::to_string(k));
      } else if (shape > previous) {
        strictly_increasing_somewhere = true;
      }
    }
    previous = shape;
  }
  if (goal == Goal::kMaximize && !strictly_increasing_somewhere && k_to > k_from) {
    note("k/rho(k) never increases in range; cannot be unbounded");
  }
  return report;
}

bool within_guarantee(std::int64_t cost, std::int64_t k, double rho_k, Goal goal) {
  const long double bound = goal == Goal::kMinimize
                                ? static_cast<long double>(k) * rho_k
                                : static_cast<long double>(k) / rho_k;
  return goal == Goal::kMinimize ? static_cast<long double>(cost) <= bound
                                 : static_cast<long double>(cost) >= bound;
}

}  // namespace paramx
