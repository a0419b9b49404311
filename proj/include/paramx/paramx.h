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

/* C interface to the paramx library. All strings returned through `char**`
 * out-parameters are heap-allocated and must be released with
 * px_string_free. Functions return a px_status; on failure px_last_error()
 * describes the problem for the calling thread. */
#ifndef PARAMX_PARAMX_H_
#define PARAMX_PARAMX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PX_API __declspec(dllexport)
#else
#define PX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum px_status {
  PX_OK = 0,
  PX_USAGE = 1,
  PX_REJECT = 2,
  PX_INFEASIBLE = 3,
  PX_PARSE = 4,
  PX_INPUT = 5,
  PX_REFUSED = 6,
  PX_EXHAUSTED = 7,
  PX_CONSTRUCTION = 8,
  PX_INTERNAL = 9
} px_status;

typedef struct px_instance px_instance;
typedef struct px_result px_result;

PX_API const char* px_version(void);
PX_API const char* px_last_error(void);
PX_API void px_string_free(char* s);

/* Instances. */
PX_API px_status px_instance_parse(const char* text, size_t len, px_instance** out);
PX_API px_status px_instance_load(const char* path, px_instance** out);
/* family: random_gnp | layered_dag | bidirected_ring | clique_like.
 * params: JSON object with any GenParams field ("kind", "n", "edge_prob",
 * "terminals", ...); NULL for defaults. */
PX_API px_status px_instance_generate(const char* family, const char* params_json, uint64_t seed,
                                      px_instance** out);
PX_API px_status px_instance_serialize(const px_instance* x, char** out);
PX_API const char* px_instance_kind(const px_instance* x);
PX_API void px_instance_free(px_instance* x);

/* Solving. */
typedef struct px_solve_options {
  int levels;          /* recursive greedy depth, default 2 */
  int has_param;       /* scss-fpt p given */
  int64_t param;
  int has_seed;        /* mec: random edge choice */
  uint64_t seed;
  int all_hubs;        /* scss: try every terminal as hub */
} px_solve_options;

PX_API void px_solve_options_init(px_solve_options* opts);
/* algo: scss-poly | scss-fpt | scss-fpt-lift | dsf | dsn | mec | dst-exact |
 * dst-greedy | setcover-greedy. Returns PX_REJECT when the algorithm
 * rejected; the result is still produced. */
PX_API px_status px_solve(const px_instance* x, const char* algo, const px_solve_options* opts,
                          px_result** out);
PX_API int px_result_rejected(const px_result* r);
PX_API int64_t px_result_cost(const px_result* r);
PX_API size_t px_result_items(const px_result* r, const int32_t** items);
PX_API px_status px_result_to_json(const px_result* r, char** out);
PX_API px_status px_result_to_text(const px_result* r, char** out);
PX_API void px_result_free(px_result* r);

/* Oracle check of one algorithm on one instance: a RatioReport as JSON and
 * text. *pass is set to 1 when the algorithm's pass rule holds. */
PX_API px_status px_verify(const px_instance* x, const char* algo, const px_solve_options* opts,
                           char** json, char** text, int* pass);

/* Reductions. from: scss-dsf | mcc-mec | projgame-setcover. setsystem is
 * "m,l,seed" or NULL (m = sigma, l = 2, seed 0) and only used by
 * projgame-setcover. *sidecar receives the parameter-map JSON. */
PX_API px_status px_reduce(const px_instance* x, const char* from, const char* setsystem,
                           px_instance** out, char** sidecar);

/* Benchmarks. *failures receives the number of hard-bound failures. */
PX_API px_status px_bench(const char* suite, int max_n, int count, uint64_t seed, int timing,
                          char** json, char** text, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* PARAMX_PARAMX_H_ */
