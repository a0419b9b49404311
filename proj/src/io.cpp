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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "paramx/error.hpp"

namespace paramx {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  fail(ErrorCode::kParse, "field '" + field + "': " + what);
}

void reject_unknown_fields(const Json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : doc.items()) {
    if (!allowed.contains(key)) parse_fail(key, "unknown field");
  }
}

const Json& require(const Json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end()) parse_fail(field, "missing");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(field, "expected an integer");
  return v.get<std::int64_t>();
}

int as_small_int(const Json& v, const std::string& field) {
  std::int64_t x = as_int(v, field);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    parse_fail(field, "integer out of range");
  }
  return static_cast<int>(x);
}

const Json& as_array(const Json& v, const std::string& field) {
  if (!v.is_array()) parse_fail(field, "expected an array");
  return v;
}

std::string at(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

std::vector<int> int_list(const Json& v, const std::string& field) {
  std::vector<int> out;
  const Json& arr = as_array(v, field);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_small_int(arr[i], at(field, i)));
  return out;
}

// Graph fields shared by the graph kinds. Range errors are reported here so
// the message names the edge rather than surfacing from DiGraph.
DiGraph parse_graph(const Json& doc) {
  std::int64_t n = as_int(require(doc, "n"), "n");
  if (n < 0 || n > std::numeric_limits<int>::max()) parse_fail("n", "must be nonnegative");
  const Json& edges = as_array(require(doc, "edges"), "edges");
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = at("edges", i);
    const Json& e = as_array(edges[i], field);
    if (e.size() != 2 && e.size() != 3) parse_fail(field, "expected [u, v] or [u, v, w]");
    Edge edge;
    edge.tail = as_small_int(e[0], at(field, 0));
    edge.head = as_small_int(e[1], at(field, 1));
    if (e.size() == 3) edge.weight = as_int(e[2], at(field, 2));
    if (edge.tail < 0 || edge.tail >= n) parse_fail(at(field, 0), "vertex id out of range");
    if (edge.head < 0 || edge.head >= n) parse_fail(at(field, 1), "vertex id out of range");
    if (edge.weight < 0) parse_fail(at(field, 2), "negative weight");
    list.push_back(edge);
  }
  try {
    return DiGraph(static_cast<int>(n), std::move(list));
  } catch (const Error& e) {
    parse_fail("edges", e.what());
  }
}

std::vector<std::pair<int, int>> int_pairs(const Json& v, const std::string& field) {
  std::vector<std::pair<int, int>> out;
  const Json& arr = as_array(v, field);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& p = as_array(arr[i], at(field, i));
    if (p.size() != 2) parse_fail(at(field, i), "expected a pair");
    out.emplace_back(as_small_int(p[0], at(at(field, i), 0)),
                     as_small_int(p[1], at(at(field, i), 1)));
  }
  return out;
}

Instance parse_document(const Json& doc) {
  if (!doc.is_object()) fail(ErrorCode::kParse, "document must be a JSON object");
  const Json& kind_field = require(doc, "kind");
  if (!kind_field.is_string()) parse_fail("kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "dst") {
    reject_unknown_fields(doc, {"kind", "n", "edges", "root", "terminals"});
    DstInstance x{parse_graph(doc), as_small_int(require(doc, "root"), "root"),
                  int_list(require(doc, "terminals"), "terminals")};
    return x;
  }
  if (kind == "scss") {
    reject_unknown_fields(doc, {"kind", "n", "edges", "terminals", "p"});
    ScssInstance x{parse_graph(doc), int_list(require(doc, "terminals"), "terminals"), {}};
    if (doc.contains("p")) x.parameter = as_int(doc["p"], "p");
    return x;
  }
  if (kind == "dsf") {
    reject_unknown_fields(doc, {"kind", "n", "edges", "pairs"});
    DsfInstance x{parse_graph(doc), {}};
    for (auto [s, t] : int_pairs(require(doc, "pairs"), "pairs")) x.pairs.push_back({s, t});
    return x;
  }
  if (kind == "dsn") {
    reject_unknown_fields(doc, {"kind", "n", "edges", "pairs", "demands"});
    DsnInstance x{parse_graph(doc), {}};
    auto pairs = int_pairs(require(doc, "pairs"), "pairs");
    auto demands = int_list(require(doc, "demands"), "demands");
    if (demands.size() != pairs.size()) parse_fail("demands", "need one demand per pair");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      x.pairs.push_back({pairs[i].first, pairs[i].second, demands[i]});
    }
    return x;
  }
  if (kind == "mec") {
    reject_unknown_fields(doc, {"kind", "n", "edges", "k", "p"});
    MecInstance x{parse_graph(doc), as_int(require(doc, "k"), "k"), {}};
    if (doc.contains("p")) x.target_size = as_int(doc["p"], "p");
    return x;
  }
  if (kind == "mcc") {
    reject_unknown_fields(doc, {"kind", "n", "edges", "colors", "p"});
    MccInstance x{parse_graph(doc), int_list(require(doc, "colors"), "colors"),
                  as_small_int(require(doc, "p"), "p")};
    return x;
  }
  if (kind == "setcover") {
    reject_unknown_fields(doc, {"kind", "universe", "sets", "labels"});
    SetCoverInstance x;
    x.universe_size = as_int(require(doc, "universe"), "universe");
    const Json& sets = as_array(require(doc, "sets"), "sets");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<std::int64_t> set;
      const Json& arr = as_array(sets[i], at("sets", i));
      for (std::size_t j = 0; j < arr.size(); ++j) {
        set.push_back(as_int(arr[j], at(at("sets", i), j)));
      }
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      x.sets.push_back(std::move(set));
    }
    if (doc.contains("labels")) {
      const Json& labels = as_array(doc["labels"], "labels");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i].is_string()) parse_fail(at("labels", i), "expected a string");
        x.labels.push_back(labels[i].get<std::string>());
      }
    }
    return x;
  }
  if (kind == "projgame") {
    reject_unknown_fields(doc, {"kind", "v1", "v2", "sigma", "edges", "pi"});
    ProjectionGame x;
    x.left = as_small_int(require(doc, "v1"), "v1");
    x.right = as_small_int(require(doc, "v2"), "v2");
    x.alphabet = as_small_int(require(doc, "sigma"), "sigma");
    x.edges = int_pairs(require(doc, "edges"), "edges");
    x.projection.assign(x.edges.size(), {});
    std::vector<bool> given(x.edges.size(), false);
    const Json& pi = as_array(require(doc, "pi"), "pi");
    for (std::size_t i = 0; i < pi.size(); ++i) {
      const std::string field = at("pi", i);
      const Json& entry = as_array(pi[i], field);
      if (entry.size() != 2) parse_fail(field, "expected [edge-index, table]");
      int e = as_small_int(entry[0], at(field, 0));
      if (e < 0 || e >= static_cast<int>(x.edges.size())) {
        parse_fail(at(field, 0), "edge index out of range");
      }
      if (given[e]) parse_fail(at(field, 0), "duplicate table for edge");
      given[e] = true;
      x.projection[e] = int_list(entry[1], at(field, 1));
    }
    for (std::size_t e = 0; e < given.size(); ++e) {
      if (!given[e]) parse_fail("pi", "missing table for edge " + std::to_string(e));
    }
    return x;
  }
  parse_fail("kind", "unknown kind '" + kind + "'");
}

OrderedJson graph_json(const DiGraph& g) {
  OrderedJson edges = OrderedJson::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head, e.weight});
  return edges;
}

struct Writer {
  OrderedJson operator()(const DstInstance& x) const {
    OrderedJson doc{{"kind", "dst"}, {"n", x.graph.num_vertices()}};
    doc["edges"] = graph_json(x.graph);
    doc["root"] = x.root;
    doc["terminals"] = x.terminals;
    return doc;
  }
  OrderedJson operator()(const ScssInstance& x) const {
    OrderedJson doc{{"kind", "scss"}, {"n", x.graph.num_vertices()}};
    doc["edges"] = graph_json(x.graph);
    doc["terminals"] = x.terminals;
    if (x.parameter) doc["p"] = *x.parameter;
    return doc;
  }
  OrderedJson operator()(const DsfInstance& x) const {
    OrderedJson doc{{"kind", "dsf"}, {"n", x.graph.num_vertices()}};
    doc["edges"] = graph_json(x.graph);
    OrderedJson pairs = OrderedJson::array();
    for (const auto& p : x.pairs) pairs.push_back({p.source, p.sink});
    doc["pairs"] = pairs;
    return doc;
  }
  OrderedJson operator()(const DsnInstance& x) const {
    OrderedJson doc{{"kind", "dsn"}, {"n", x.graph.num_vertices()}};
    doc["edges"] = graph_json(x.graph);
    OrderedJson pairs = OrderedJson::array();
    OrderedJson demands = OrderedJson::array();
    for (const auto& p : x.pairs) {
      pairs.push_back({p.source, p.sink});
      demands.push_back(p.demand);
    }
    doc["pairs"] = pairs;
    doc["demands"] = demands;
    return doc;
  }
  OrderedJson operator()(const MecInstance& x) const {
    OrderedJson doc{{"kind", "mec"}, {"n", x.graph.num_vertices()}};
    doc["edges"] = graph_json(x.graph);
    doc["k"] = x.k;
    if (x.target_size) doc["p"] = *x.target_size;
    return doc;
  }
  OrderedJson operator()(const MccInstance& x) const {
    OrderedJson doc{{"kind", "mcc"}, {"n", x.graph.num_vertices()}};
    doc["edges"] = graph_json(x.graph);
    doc["colors"] = x.colors;
    doc["p"] = x.p;
    return doc;
  }
  OrderedJson operator()(const SetCoverInstance& x) const {
    OrderedJson doc{{"kind", "setcover"}, {"universe", x.universe_size}};
    doc["sets"] = x.sets;
    if (!x.labels.empty()) doc["labels"] = x.labels;
    return doc;
  }
  OrderedJson operator()(const ProjectionGame& x) const {
    OrderedJson doc{{"kind", "projgame"}, {"v1", x.left}, {"v2", x.right}, {"sigma", x.alphabet}};
    OrderedJson edges = OrderedJson::array();
    for (auto [a, b] : x.edges) edges.push_back({a, b});
    doc["edges"] = edges;
    OrderedJson pi = OrderedJson::array();
    for (std::size_t e = 0; e < x.projection.size(); ++e) {
      pi.push_back({static_cast<int>(e), x.projection[e]});
    }
    doc["pi"] = pi;
    return doc;
  }
};

}  // namespace

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, e.what());
  }
  Instance instance = parse_document(doc);
  try {
    validate(instance);
  } catch (const Error& e) {
    fail(ErrorCode::kParse, std::string("field ") + e.what());
  }
  return instance;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kInput, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  return std::visit(Writer{}, instance).dump() + "\n";
}

}  // namespace paramx
