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

#include "paramx/io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "paramx/error.hpp"
#include "paramx/generate.hpp"

namespace paramx {
namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return "";
}

TEST(Io, ParsesEveryKind) {
  Instance x = parse_instance(R"({"kind":"dst","n":3,"edges":[[0,1],[1,2,5]],"root":0,"terminals":[2]})");
  const auto& dst = std::get<DstInstance>(x);
  EXPECT_EQ(dst.graph.edge(1).weight, 5);
  EXPECT_EQ(dst.terminals, std::vector<Vertex>{2});

  x = parse_instance(R"({"kind":"scss","n":2,"edges":[[0,1],[1,0]],"terminals":[1,0],"p":2})");
  EXPECT_EQ(std::get<ScssInstance>(x).parameter, 2);
  EXPECT_EQ(std::get<ScssInstance>(x).terminals.front(), 1);

  x = parse_instance(R"({"kind":"dsn","n":3,"edges":[[0,1],[1,2]],"pairs":[[0,2]],"demands":[1]})");
  EXPECT_EQ(std::get<DsnInstance>(x).pairs.front().demand, 1);

  x = parse_instance(R"({"kind":"setcover","universe":3,"sets":[[2,0,0],[1]]})");
  EXPECT_EQ(std::get<SetCoverInstance>(x).sets.front(), (std::vector<std::int64_t>{0, 2}));
}

TEST(Io, ErrorsNameTheField) {
  EXPECT_NE(parse_error(R"({"kind":"dst","n":2,"edges":[[0,5]],"root":0,"terminals":[1]})")
                .find("edges[0][1]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"kind":"dst","n":2,"edges":[[0,1]],"root":0})").find("terminals"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"kind":"dst","n":2,"edges":[[0,1]],"root":0,"terminals":[1],"x":1})")
                .find("x"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"kind":"nope"})").find("kind"), std::string::npos);
  EXPECT_NE(parse_error("{\"kind\":\n\"scss\",").find("line"), std::string::npos);
  parse_error(R"({"kind":"scss","n":2,"edges":[[0,1],[0,1]],"terminals":[0,1]})");
  parse_error(R"({"kind":"scss","n":2,"edges":[[0,1]],"terminals":[0]})");
  parse_error(R"({"kind":"mec","n":2,"edges":[[0,1],[1,0]],"k":1})");
  parse_error(R"({"kind":"dsn","n":2,"edges":[[0,1]],"pairs":[[0,1]],"demands":[0]})");
  parse_error(R"({"kind":"dsf","n":2,"edges":[[0,1]],"pairs":[[0,0]]})");
  parse_error(R"({"kind":"dst","n":2,"edges":[[0,1,-2]],"root":0,"terminals":[1]})");
  parse_error("[1,2]");
}

TEST(Io, RoundTripsGeneratedInstances) {
  const ProblemKind kinds[] = {ProblemKind::kDst,  ProblemKind::kScss, ProblemKind::kDsf,
                               ProblemKind::kDsn,  ProblemKind::kMec,  ProblemKind::kMcc,
                               ProblemKind::kSetCover, ProblemKind::kProjGame};
  const Family families[] = {Family::kRandomGnp, Family::kLayeredDag, Family::kBidirectedRing,
                             Family::kCliqueLike};
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenParams p;
    p.kind = kinds[seed % 8];
    p.n = 3 + static_cast<int>(seed % 6);
    p.max_weight = 1 + static_cast<int>(seed % 3);
    p.max_demand = 2;
    Instance x = generate(families[(seed / 8) % 4], p, seed).instance;
    const std::string text = serialize_instance(x);
    Instance back = parse_instance(text);
    EXPECT_EQ(back, x) << text;
    EXPECT_EQ(serialize_instance(back), text);
    ++checked;
  }
  EXPECT_EQ(checked, 50);
}

TEST(Io, LoadReportsMissingFile) {
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), Error);
}

}  // namespace
}  // namespace paramx
