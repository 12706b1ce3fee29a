/*
 * Copyright 2026 The tapx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TAPX_TAPX_H
#define TAPX_TAPX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TAPX_BUILDING)
#    define TAPX_API __declspec(dllexport)
#  else
#    define TAPX_API __declspec(dllimport)
#  endif
#else
#  define TAPX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tapx_status {
  TAPX_OK = 0,
  TAPX_ERR_ARGUMENT = 1,   /* null pointer or out-of-range argument */
  TAPX_ERR_PARSE = 2,
  TAPX_ERR_INFEASIBLE = 3,
  TAPX_ERR_ASSERTION = 4,  /* internal invariant failed */
  TAPX_ERR_BUDGET = 5,
  TAPX_ERR_INTERNAL = 6
} tapx_status;

typedef struct tapx_instance tapx_instance;
typedef struct tapx_solution tapx_solution;

typedef struct tapx_solve_options {
  int check;       /* nonzero: run the invariant suite every iteration */
  int trace;       /* nonzero: keep audit records */
  int max_greedy;  /* largest link set tried by greedy contraction */
} tapx_solve_options;

typedef struct tapx_stats {
  int iterations;
  int greedy;
  int prep1;
  int prep2;
  int latches;
  int swaps;
  int matching;
} tapx_stats;

typedef struct tapx_exact_info {
  int exact;  /* 0 when the budget ran out */
  int size;
  int lower;
  int upper;
  int64_t nodes;
} tapx_exact_info;

/* Message of the last failed call on this thread. Never null. */
TAPX_API const char* tapx_last_error(void);
TAPX_API const char* tapx_version(void);
/* Frees strings returned through char** out-parameters. */
TAPX_API void tapx_string_free(char* s);

TAPX_API tapx_status tapx_instance_parse(const char* text, tapx_instance** out);
TAPX_API tapx_status tapx_instance_generate(int nodes, double density, uint64_t seed,
                                            tapx_instance** out);
TAPX_API void tapx_instance_free(tapx_instance* inst);
TAPX_API tapx_status tapx_instance_format(const tapx_instance* inst, char** out);
TAPX_API int tapx_instance_node_count(const tapx_instance* inst);
/* Raw input links including duplicates. */
TAPX_API int tapx_instance_input_link_count(const tapx_instance* inst);
/* Links after shadow closure. */
TAPX_API int tapx_instance_closed_link_count(const tapx_instance* inst);
TAPX_API int tapx_instance_is_feasible(const tapx_instance* inst);
TAPX_API int tapx_leaf_lower_bound(const tapx_instance* inst);
TAPX_API tapx_status tapx_anatomy_format(const tapx_instance* inst, char** out);
TAPX_API tapx_status tapx_lp_export(const tapx_instance* inst, char** out);

TAPX_API void tapx_solve_options_default(tapx_solve_options* options);
/* options may be null for defaults. */
TAPX_API tapx_status tapx_solve(const tapx_instance* inst, const tapx_solve_options* options,
                                tapx_solution** out);
TAPX_API tapx_status tapx_two_approx(const tapx_instance* inst, tapx_solution** out);
/* max_size < 0 means unbounded; budget <= 0 means the default. The witness is
 * returned when out is non-null. */
TAPX_API tapx_status tapx_exact(const tapx_instance* inst, int max_size, int64_t budget,
                                tapx_exact_info* info, tapx_solution** out);
TAPX_API void tapx_solution_free(tapx_solution* sol);
/* Number of distinct input links in the cover. */
TAPX_API int tapx_solution_size(const tapx_solution* sol);
/* Number of links in the cover before mapping shadows back to input links. */
TAPX_API int tapx_solution_closed_size(const tapx_solution* sol);
/* Copies up to cap input-link indices; returns the total count. */
TAPX_API int tapx_solution_links(const tapx_solution* sol, int* ids, int cap);
TAPX_API tapx_status tapx_solution_format(const tapx_solution* sol, char** out);
TAPX_API tapx_status tapx_solution_trace(const tapx_solution* sol, char** out);
TAPX_API tapx_status tapx_solution_stats(const tapx_solution* sol, tapx_stats* out);

/* Parses cover_text against inst. *ok is 1 for a cover; otherwise the first
 * uncovered tree edge is reported as child/parent node ids. */
TAPX_API tapx_status tapx_verify(const tapx_instance* inst, const char* cover_text, int* ok,
                                 int* uncovered_child, int* uncovered_parent);

#ifdef __cplusplus
}
#endif

#endif /* TAPX_TAPX_H */
