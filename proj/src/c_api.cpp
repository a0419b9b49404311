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

#include "paramx/paramx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "paramx/bench.hpp"
#include "paramx/error.hpp"
#include "paramx/generate.hpp"
#include "paramx/io.hpp"
#include "paramx/reductions.hpp"
#include "paramx/runner.hpp"

struct px_instance {
  paramx::Instance value;
  std::string kind;
};

struct px_result {
  paramx::SolveResult value;
  paramx::Instance instance;
  std::vector<std::int32_t> items;
};

namespace {

using paramx::ErrorCode;

thread_local std::string last_error;

px_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput:
      return PX_INPUT;
    case ErrorCode::kParse:
      return PX_PARSE;
    case ErrorCode::kInfeasible:
      return PX_INFEASIBLE;
    case ErrorCode::kRefused:
      return PX_REFUSED;
    case ErrorCode::kExhausted:
      return PX_EXHAUSTED;
    case ErrorCode::kConstructionFailed:
      return PX_CONSTRUCTION;
  }
  return PX_INTERNAL;
}

// Runs `body`, translating exceptions into a status and last_error.
template <typename F>
px_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const paramx::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return PX_PARSE;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return PX_INTERNAL;
  }
}

px_status usage(const std::string& what) {
  last_error = what;
  return PX_USAGE;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

px_instance* wrap(paramx::Instance x) {
  auto* out = new px_instance{std::move(x), {}};
  out->kind = std::string(paramx::kind_name(out->value));
  return out;
}

paramx::GenParams params_from_json(const std::string& text) {
  paramx::GenParams p;
  if (text.empty()) return p;
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) paramx::fail(ErrorCode::kParse, "generator parameters must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      auto kind = paramx::kind_from_name(value.get<std::string>());
      if (!kind) paramx::fail(ErrorCode::kInput, "unknown kind '" + value.get<std::string>() + "'");
      p.kind = *kind;
    } else if (key == "n") {
      p.n = value.get<int>();
    } else if (key == "edge_prob") {
      p.edge_prob = value.get<double>();
    } else if (key == "terminals") {
      p.terminals = value.get<int>();
    } else if (key == "pairs") {
      p.pairs = value.get<int>();
    } else if (key == "max_demand") {
      p.max_demand = value.get<int>();
    } else if (key == "k") {
      p.k = value.get<std::int64_t>();
    } else if (key == "layers") {
      p.layers = value.get<int>();
    } else if (key == "max_edges") {
      p.max_edges = value.get<int>();
    } else if (key == "max_weight") {
      p.max_weight = value.get<int>();
    } else if (key == "colors") {
      p.colors = value.get<int>();
    } else if (key == "universe") {
      p.universe = value.get<int>();
    } else if (key == "sets") {
      p.sets = value.get<int>();
    } else if (key == "left") {
      p.left = value.get<int>();
    } else if (key == "right") {
      p.right = value.get<int>();
    } else if (key == "alphabet") {
      p.alphabet = value.get<int>();
    } else if (key == "satisfiable") {
      p.satisfiable = value.get<bool>();
    } else {
      paramx::fail(ErrorCode::kInput, "unknown generator parameter '" + key + "'");
    }
  }
  return p;
}

paramx::SolveOptions solve_options(const px_solve_options* o) {
  paramx::SolveOptions out;
  if (o == nullptr) return out;
  out.levels = o->levels;
  if (o->has_param) out.parameter = o->param;
  if (o->has_seed) out.seed = o->seed;
  out.all_hubs = o->all_hubs != 0;
  return out;
}

// "m,l,seed" with every field required.
std::tuple<int, int, std::uint64_t> parse_setsystem(const std::string& spec) {
  std::istringstream in(spec);
  long long m = 0;
  long long l = 0;
  unsigned long long seed = 0;
  char c1 = 0;
  char c2 = 0;
  if (!(in >> m >> c1 >> l >> c2 >> seed) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
    paramx::fail(ErrorCode::kInput, "setsystem must be 'm,l,seed', got '" + spec + "'");
  }
  return {static_cast<int>(m), static_cast<int>(l), seed};
}

}  // namespace

extern "C" {

const char* px_version(void) { return "0.3.0"; }

const char* px_last_error(void) { return last_error.c_str(); }

void px_string_free(char* s) { std::free(s); }

px_status px_instance_parse(const char* text, size_t len, px_instance** out) {
  if (text == nullptr || out == nullptr) return usage("px_instance_parse: null argument");
  return guarded([&] {
    *out = wrap(paramx::parse_instance(std::string_view(text, len)));
    return PX_OK;
  });
}

px_status px_instance_load(const char* path, px_instance** out) {
  if (path == nullptr || out == nullptr) return usage("px_instance_load: null argument");
  return guarded([&] {
    *out = wrap(paramx::load_instance(path));
    return PX_OK;
  });
}

px_status px_instance_generate(const char* family, const char* params_json, uint64_t seed,
                               px_instance** out) {
  if (family == nullptr || out == nullptr) return usage("px_instance_generate: null argument");
  return guarded([&] {
    auto f = paramx::family_from_name(family);
    if (!f) {
      paramx::fail(ErrorCode::kInput, std::string("unknown family '") + family +
                                          "' (random_gnp, layered_dag, bidirected_ring, clique_like)");
    }
    paramx::GenParams p = params_from_json(params_json == nullptr ? "" : params_json);
    *out = wrap(paramx::generate(*f, p, seed).instance);
    return PX_OK;
  });
}

px_status px_instance_serialize(const px_instance* x, char** out) {
  if (x == nullptr || out == nullptr) return usage("px_instance_serialize: null argument");
  return guarded([&] {
    *out = dup(paramx::serialize_instance(x->value));
    return PX_OK;
  });
}

const char* px_instance_kind(const px_instance* x) { return x == nullptr ? "" : x->kind.c_str(); }

void px_instance_free(px_instance* x) { delete x; }

void px_solve_options_init(px_solve_options* opts) {
  if (opts == nullptr) return;
  *opts = px_solve_options{};
  opts->levels = 2;
}

px_status px_solve(const px_instance* x, const char* algo, const px_solve_options* opts,
                   px_result** out) {
  if (x == nullptr || algo == nullptr || out == nullptr) return usage("px_solve: null argument");
  auto a = paramx::algo_from_name(algo);
  if (!a) return usage(std::string("unknown algorithm '") + algo + "'");
  return guarded([&] {
    auto r = std::make_unique<px_result>();
    r->value = paramx::run_algorithm(x->value, *a, solve_options(opts));
    r->instance = x->value;
    r->items.assign(r->value.outcome.solution.items.begin(), r->value.outcome.solution.items.end());
    const bool rejected = r->value.outcome.solution.rejected();
    *out = r.release();
    return rejected ? PX_REJECT : PX_OK;
  });
}

int px_result_rejected(const px_result* r) {
  return r == nullptr || r->value.outcome.solution.rejected() ? 1 : 0;
}

int64_t px_result_cost(const px_result* r) { return r == nullptr ? 0 : r->value.outcome.solution.cost; }

size_t px_result_items(const px_result* r, const int32_t** items) {
  if (r == nullptr) return 0;
  if (items != nullptr) *items = r->items.data();
  return r->items.size();
}

px_status px_result_to_json(const px_result* r, char** out) {
  if (r == nullptr || out == nullptr) return usage("px_result_to_json: null argument");
  return guarded([&] {
    *out = dup(paramx::solution_json(r->instance, r->value));
    return PX_OK;
  });
}

px_status px_result_to_text(const px_result* r, char** out) {
  if (r == nullptr || out == nullptr) return usage("px_result_to_text: null argument");
  return guarded([&] {
    *out = dup(paramx::solution_text(r->instance, r->value));
    return PX_OK;
  });
}

void px_result_free(px_result* r) { delete r; }

px_status px_verify(const px_instance* x, const char* algo, const px_solve_options* opts,
                    char** json, char** text, int* pass) {
  if (x == nullptr || algo == nullptr) return usage("px_verify: null argument");
  auto a = paramx::algo_from_name(algo);
  if (!a) return usage(std::string("unknown algorithm '") + algo + "'");
  return guarded([&] {
    paramx::RatioReport r = paramx::evaluate(x->value, *a, solve_options(opts),
                                             paramx::OracleBudget::from_env(), "input");
    if (json != nullptr) *json = dup(paramx::report_json(r, false) + "\n");
    if (text != nullptr) *text = dup(paramx::report_text(r) + "\n");
    if (pass != nullptr) *pass = r.pass ? 1 : 0;
    return PX_OK;
  });
}

px_status px_reduce(const px_instance* x, const char* from, const char* setsystem,
                    px_instance** out, char** sidecar) {
  if (x == nullptr || from == nullptr || out == nullptr) return usage("px_reduce: null argument");
  const std::string kind(from);
  if (kind != "scss-dsf" && kind != "mcc-mec" && kind != "projgame-setcover") {
    return usage("unknown reduction '" + kind + "' (scss-dsf, mcc-mec, projgame-setcover)");
  }
  return guarded([&] {
    nlohmann::ordered_json side;
    side["reduction"] = kind;
    auto need = [&](const char* expected) {
      if (x->kind != expected) {
        paramx::fail(ErrorCode::kInput,
                     kind + " needs a " + expected + " instance, got " + x->kind);
      }
    };
    if (kind == "scss-dsf") {
      need("scss");
      const auto& src = std::get<paramx::ScssInstance>(x->value);
      paramx::ScssToDsf red = paramx::scss_to_dsf(src);
      side["terminals"] = red.terminals;
      side["pairs"] = red.instance.pairs.size();
      side["parameter_map"] = "p -> p + 2l";
      side["shift"] = red.parameter_shift;
      side["shift_text"] = "+2l = +" + std::to_string(red.parameter_shift);
      side["source_vertices"] = src.graph.num_vertices();
      side["source_edges"] = src.graph.num_edges();
      side["image_vertices"] = red.instance.graph.num_vertices();
      side["image_edges"] = red.instance.graph.num_edges();
      if (src.parameter) side["p"] = *src.parameter + red.parameter_shift;
      *out = wrap(std::move(red.instance));
    } else if (kind == "mcc-mec") {
      need("mcc");
      const auto& src = std::get<paramx::MccInstance>(x->value);
      paramx::MccToMec red = paramx::mcc_to_mec(src);
      side["p"] = src.p;
      side["k"] = red.instance.k;
      side["parameter_map"] = "k = C(p,2)";
      side["warnings"] = red.warnings;
      *out = wrap(std::move(red.instance));
    } else {
      need("projgame");
      const auto& game = std::get<paramx::ProjectionGame>(x->value);
      int m = game.alphabet;
      int l = 2;
      std::uint64_t seed = 0;
      if (setsystem != nullptr) std::tie(m, l, seed) = parse_setsystem(setsystem);
      paramx::CertifiedSetSystem sys = paramx::build_set_system(m, l, seed);
      paramx::SetCoverInstance cover = paramx::projgame_to_setcover(game, sys.system);
      side["setsystem"] = {{"m", m}, {"l", l}, {"seed", seed}, {"attempts", sys.attempts},
                           {"certified", sys.certificate.valid},
                           {"collections_checked", sys.certificate.collections_checked},
                           {"universe", sys.system.universe_size()}};
      side["sets"] = cover.sets.size();
      side["sets_formula"] = "(|V1|+|V2|)*sigma = (" + std::to_string(game.left) + "+" +
                             std::to_string(game.right) + ")*" + std::to_string(game.alphabet);
      side["universe"] = cover.universe_size;
      side["universe_formula"] = "|E|*|B| = " + std::to_string(game.edges.size()) + "*" +
                                 std::to_string(sys.system.universe_size());
      *out = wrap(std::move(cover));
    }
    if (sidecar != nullptr) *sidecar = dup(side.dump(2) + "\n");
    return PX_OK;
  });
}

px_status px_bench(const char* suite, int max_n, int count, uint64_t seed, int timing, char** json,
                   char** text, int* failures) {
  if (suite == nullptr) return usage("px_bench: null suite");
  return guarded([&] {
    paramx::BenchOptions o;
    o.suite = suite;
    o.max_n = max_n;
    o.count = count;
    o.seed = seed;
    o.budget = paramx::OracleBudget::from_env();
    paramx::BenchReport report = paramx::run_bench(o);
    if (json != nullptr) *json = dup(paramx::bench_json(report, timing != 0));
    if (text != nullptr) *text = dup(paramx::bench_text(report));
    if (failures != nullptr) *failures = report.failures;
    return PX_OK;
  });
}

}  // extern "C"
