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

#ifndef PARAMX_ERROR_HPP_
#define PARAMX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace paramx {

enum class ErrorCode {
  kInput,               // invalid argument or instance invariant violated
  kParse,               // malformed instance document
  kInfeasible,          // the instance has no feasible solution
  kRefused,             // an exact solver declined: budget or cap exceeded
  kExhausted,           // parameter sweep ended without an accepted solution
  kConstructionFailed,  // randomized construction ran out of retries
};

// Single exception type for the library; the code drives exit statuses
// and the C API's status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace paramx

#endif  // PARAMX_ERROR_HPP_
