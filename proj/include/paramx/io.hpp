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

#ifndef PARAMX_IO_HPP_
#define PARAMX_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "paramx/instance.hpp"

namespace paramx {

// Parses one instance document. Field names are exact and unknown fields are
// rejected; every invariant is enforced. Errors carry ErrorCode::kParse and
// name the offending field (JSON syntax errors also give line and column).
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

// Canonical form: fixed key order, edges always written as [u, v, w].
std::string serialize_instance(const Instance& instance);

}  // namespace paramx

#endif  // PARAMX_IO_HPP_
