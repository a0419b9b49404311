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

// paramx command-line front end. Exit codes:
//   0 success or accepted      3 instance infeasible
//   1 usage, parse or input    4 oracle or solver refused (budget, cap)
//   2 Reject / no acceptance   5 a verified bound failed
//   6 construction failed or internal error
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "paramx/paramx.h"

namespace {

constexpr int kExitBoundFailed = 5;

int exit_code(px_status s) {
  switch (s) {
    case PX_OK:
      return 0;
    case PX_USAGE:
    case PX_PARSE:
    case PX_INPUT:
      return 1;
    case PX_REJECT:
    case PX_EXHAUSTED:
      return 2;
    case PX_INFEASIBLE:
      return 3;
    case PX_REFUSED:
      return 4;
    case PX_CONSTRUCTION:
    case PX_INTERNAL:
      return 6;
  }
  return 6;
}

int report_error(px_status s) {
  std::cerr << "paramx: " << px_last_error() << '\n';
  return exit_code(s);
}

// Owns a string returned by the C API.
struct CString {
  char* p = nullptr;
  ~CString() { px_string_free(p); }
  [[nodiscard]] std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

struct Instance {
  px_instance* p = nullptr;
  ~Instance() { px_instance_free(p); }
};

struct Result {
  px_result* p = nullptr;
  ~Result() { px_result_free(p); }
};

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "paramx: cannot write " << path << '\n';
    return false;
  }
  return true;
}

struct SolveArgs {
  std::string algo;
  std::string in;
  int levels = 2;
  std::optional<long long> param;
  std::optional<unsigned long long> seed;
  bool all_hubs = false;
  bool json = false;
  bool verify = false;
};

px_solve_options to_options(const SolveArgs& a) {
  px_solve_options o;
  px_solve_options_init(&o);
  o.levels = a.levels;
  if (a.param) {
    o.has_param = 1;
    o.param = *a.param;
  }
  if (a.seed) {
    o.has_seed = 1;
    o.seed = *a.seed;
  }
  o.all_hubs = a.all_hubs ? 1 : 0;
  return o;
}

void add_solve_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--algo", a.algo, "scss-poly|scss-fpt|scss-fpt-lift|dsf|dsn|mec|dst-exact|"
                                    "dst-greedy|setcover-greedy")
      ->required();
  cmd->add_option("--in", a.in, "instance file")->required();
  cmd->add_option("--levels", a.levels, "recursive greedy depth i")->check(CLI::Range(1, 16));
  cmd->add_option("--param", a.param, "parameter p for scss-fpt");
  cmd->add_option("--seed", a.seed, "mec: choose k random edges");
  cmd->add_flag("--all-hubs", a.all_hubs, "scss: try every terminal as hub");
  cmd->add_flag("--json", a.json, "machine-readable output");
}

int run_verify(const Instance& x, const SolveArgs& a, const px_solve_options& o) {
  CString json;
  CString text;
  int pass = 0;
  px_status s = px_verify(x.p, a.algo.c_str(), &o, &json.p, &text.p, &pass);
  if (s != PX_OK) return report_error(s);
  std::cout << (a.json ? json.str() : text.str());
  return pass ? 0 : kExitBoundFailed;
}

int cmd_solve(const SolveArgs& a) {
  Instance x;
  px_status s = px_instance_load(a.in.c_str(), &x.p);
  if (s != PX_OK) return report_error(s);
  const px_solve_options o = to_options(a);
  Result r;
  s = px_solve(x.p, a.algo.c_str(), &o, &r.p);
  if (s != PX_OK && s != PX_REJECT) return report_error(s);
  CString out;
  px_status fmt = a.json ? px_result_to_json(r.p, &out.p) : px_result_to_text(r.p, &out.p);
  if (fmt != PX_OK) return report_error(fmt);
  std::cout << out.str();
  if (a.verify) {
    int v = run_verify(x, a, o);
    if (v != 0) return v;
  }
  return exit_code(s);
}

int cmd_verify(const SolveArgs& a) {
  Instance x;
  px_status s = px_instance_load(a.in.c_str(), &x.p);
  if (s != PX_OK) return report_error(s);
  return run_verify(x, a, to_options(a));
}

struct ReduceArgs {
  std::string from;
  std::string in;
  std::string out;
  std::optional<std::string> setsystem;
};

int cmd_reduce(const ReduceArgs& a) {
  Instance x;
  px_status s = px_instance_load(a.in.c_str(), &x.p);
  if (s != PX_OK) return report_error(s);
  Instance image;
  CString sidecar;
  s = px_reduce(x.p, a.from.c_str(), a.setsystem ? a.setsystem->c_str() : nullptr, &image.p,
                &sidecar.p);
  if (s != PX_OK) return report_error(s);
  CString text;
  s = px_instance_serialize(image.p, &text.p);
  if (s != PX_OK) return report_error(s);
  if (!write_file(a.out, text.str())) return 1;
  if (!write_file(a.out + ".provenance.json", sidecar.str())) return 1;
  std::cout << sidecar.str();
  return 0;
}

struct BenchArgs {
  std::string suite = "figure1";
  int max_n = 8;
  int count = 20;
  unsigned long long seed = 0;
  bool json = false;
  bool timing = false;
  std::optional<std::string> out;
};

int cmd_bench(const BenchArgs& a) {
  CString json;
  CString text;
  int failures = 0;
  px_status s = px_bench(a.suite.c_str(), a.max_n, a.count, a.seed, a.timing ? 1 : 0, &json.p,
                         &text.p, &failures);
  if (s != PX_OK) return report_error(s);
  if (a.out && !write_file(*a.out, json.str())) return 1;
  std::cout << (a.json ? json.str() : text.str());
  return failures > 0 ? kExitBoundFailed : 0;
}

struct GenerateArgs {
  std::string family = "random_gnp";
  std::string kind = "scss";
  unsigned long long seed = 0;
  std::optional<std::string> out;
  std::optional<int> n, terminals, pairs, max_demand, layers, max_edges, max_weight, colors, universe,
      sets, left, right, alphabet;
  std::optional<long long> k;
  std::optional<double> edge_prob;
  bool unsatisfiable = false;
};

std::string params_json(const GenerateArgs& a) {
  std::ostringstream os;
  os << "{\"kind\":\"" << a.kind << '"';
  auto put = [&](const char* key, const auto& value) {
    if (value) os << ",\"" << key << "\":" << *value;
  };
  put("n", a.n);
  put("terminals", a.terminals);
  put("pairs", a.pairs);
  put("max_demand", a.max_demand);
  put("layers", a.layers);
  put("max_edges", a.max_edges);
  put("max_weight", a.max_weight);
  put("colors", a.colors);
  put("universe", a.universe);
  put("sets", a.sets);
  put("left", a.left);
  put("right", a.right);
  put("alphabet", a.alphabet);
  put("k", a.k);
  if (a.edge_prob) {
    os.precision(17);
    os << ",\"edge_prob\":" << *a.edge_prob;
  }
  if (a.unsatisfiable) os << ",\"satisfiable\":false";
  os << '}';
  return os.str();
}

int cmd_generate(const GenerateArgs& a) {
  if (a.kind.find('"') != std::string::npos) {
    std::cerr << "paramx: bad kind\n";
    return 1;
  }
  Instance x;
  px_status s = px_instance_generate(a.family.c_str(), params_json(a).c_str(), a.seed, &x.p);
  if (s != PX_OK) return report_error(s);
  CString text;
  s = px_instance_serialize(x.p, &text.p);
  if (s != PX_OK) return report_error(s);
  if (a.out) return write_file(*a.out, text.str()) ? 0 : 1;
  std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paramx: approximation algorithms, exact oracles and reductions"};
  app.set_version_flag("--version", std::string(px_version()));
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run an algorithm on an instance file");
  add_solve_flags(solve_cmd, solve);
  solve_cmd->add_flag("--verify", solve.verify, "also print an oracle RatioReport");

  SolveArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "compare an algorithm with the exact oracle");
  add_solve_flags(verify_cmd, verify);

  ReduceArgs reduce;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "transform an instance");
  reduce_cmd->add_option("--from", reduce.from, "scss-dsf|mcc-mec|projgame-setcover")->required();
  reduce_cmd->add_option("--in", reduce.in, "source instance")->required();
  reduce_cmd->add_option("--out", reduce.out, "image instance; sidecar at <out>.provenance.json")
      ->required();
  reduce_cmd->add_option("--setsystem", reduce.setsystem, "m,l,seed for projgame-setcover");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "ratio table over a generated corpus");
  bench_cmd->add_option("--suite", bench.suite, "figure1|reductions");
  bench_cmd->add_option("--max-n", bench.max_n, "largest vertex count");
  bench_cmd->add_option("--count", bench.count, "corpus size");
  bench_cmd->add_option("--seed", bench.seed, "corpus seed");
  bench_cmd->add_flag("--json", bench.json, "print machine-readable output");
  bench_cmd->add_flag("--timing", bench.timing, "include wall times in the JSON");
  bench_cmd->add_option("--out", bench.out, "also write the JSON here");

  GenerateArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "write a seeded instance");
  gen_cmd->add_option("--family", gen.family, "random_gnp|layered_dag|bidirected_ring|clique_like");
  gen_cmd->add_option("--kind", gen.kind, "dst|scss|dsf|dsn|mec|mcc|setcover|projgame");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--edge-prob", gen.edge_prob);
  gen_cmd->add_option("--terminals", gen.terminals);
  gen_cmd->add_option("--pairs", gen.pairs);
  gen_cmd->add_option("--max-demand", gen.max_demand);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--layers", gen.layers);
  gen_cmd->add_option("--max-edges", gen.max_edges);
  gen_cmd->add_option("--max-weight", gen.max_weight);
  gen_cmd->add_option("--colors", gen.colors);
  gen_cmd->add_option("--universe", gen.universe);
  gen_cmd->add_option("--sets", gen.sets);
  gen_cmd->add_option("--left", gen.left);
  gen_cmd->add_option("--right", gen.right);
  gen_cmd->add_option("--alphabet", gen.alphabet);
  gen_cmd->add_flag("--unsatisfiable", gen.unsatisfiable, "projgame: no planted labeling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*solve_cmd) return cmd_solve(solve);
  if (*verify_cmd) return cmd_verify(verify);
  if (*reduce_cmd) return cmd_reduce(reduce);
  if (*bench_cmd) return cmd_bench(bench);
  if (*gen_cmd) return cmd_generate(gen);
  return 1;
}
