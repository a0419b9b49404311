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

#ifndef PARAMX_BENCH_HPP_
#define PARAMX_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "paramx/oracle.hpp"
#include "paramx/runner.hpp"

namespace paramx {

inline constexpr const char* kBenchSchema = "paramx.bench/1";

struct BenchOptions {
  std::string suite = "figure1";  // "figure1" or "reductions"
  int max_n = 8;
  int count = 20;
  std::uint64_t seed = 0;
  OracleBudget budget;
};

struct BenchReport {
  BenchOptions options;
  std::vector<RatioReport> rows;  // sorted by (instance id, algorithm)
  int failures = 0;               // rows failing a hard bound
  int refused = 0;                // rows whose oracle refused
};

// Generates the suite's corpus from `seed` and evaluates every applicable
// (instance, algorithm) cell. Throws Error{kInput} for an unknown suite or
// max_n < 3.
BenchReport run_bench(const BenchOptions& options);

std::string bench_json(const BenchReport& report, bool with_timing = false);
std::string bench_text(const BenchReport& report);

// Stream `stream` of a corpus seeded with `seed`; splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace paramx

#endif  // PARAMX_BENCH_HPP_
