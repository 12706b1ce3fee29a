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

#include <stdio.h>
#include <string.h>

#include "tapx/tapx.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kStarStem =
    "tap 1\nnodes 4\nroot 0\nedge 0 1\nedge 1 2\nedge 1 3\nlink 2 3\nlink 2 0\n";

int main(void) {
  tapx_instance* inst = NULL;
  EXPECT(tapx_instance_parse(kStarStem, &inst) == TAPX_OK);
  EXPECT(tapx_instance_node_count(inst) == 4);
  EXPECT(tapx_instance_input_link_count(inst) == 2);
  EXPECT(tapx_instance_closed_link_count(inst) == 5);
  EXPECT(tapx_instance_is_feasible(inst) == 1);
  EXPECT(tapx_leaf_lower_bound(inst) == 1);

  tapx_solve_options opt;
  tapx_solve_options_default(&opt);
  EXPECT(opt.check == 1 && opt.max_greedy == 5);
  opt.trace = 1;
  tapx_solution* sol = NULL;
  EXPECT(tapx_solve(inst, &opt, &sol) == TAPX_OK);
  EXPECT(tapx_solution_size(sol) == 2);
  int ids[4] = {-1, -1, -1, -1};
  EXPECT(tapx_solution_links(sol, ids, 4) == 2);
  EXPECT(ids[0] == 0 && ids[1] == 1);
  char* text = NULL;
  EXPECT(tapx_solution_format(sol, &text) == TAPX_OK);
  EXPECT(strcmp(text, "link 2 3\nlink 2 0\nsize 2\n") == 0);

  int ok = 0, child = 0, parent = 0;
  EXPECT(tapx_verify(inst, text, &ok, &child, &parent) == TAPX_OK);
  EXPECT(ok == 1);
  tapx_string_free(text);
  EXPECT(tapx_verify(inst, "link 2 3\n", &ok, &child, &parent) == TAPX_OK);
  EXPECT(ok == 0 && child == 1 && parent == 0);
  EXPECT(tapx_verify(inst, "link 0 3\n", &ok, NULL, NULL) == TAPX_ERR_PARSE);

  EXPECT(tapx_solution_trace(sol, &text) == TAPX_OK);
  EXPECT(strstr(text, "\"kind\":\"greedy\"") != NULL);
  tapx_string_free(text);
  tapx_stats st;
  EXPECT(tapx_solution_stats(sol, &st) == TAPX_OK);
  EXPECT(st.greedy == 2 && st.iterations == 0);
  tapx_solution_free(sol);

  tapx_exact_info info;
  tapx_solution* wit = NULL;
  EXPECT(tapx_exact(inst, -1, 0, &info, &wit) == TAPX_OK);
  EXPECT(info.exact == 1 && info.size == 2);
  EXPECT(tapx_solution_closed_size(wit) == 2);
  tapx_solution_free(wit);

  EXPECT(tapx_two_approx(inst, &sol) == TAPX_OK);
  EXPECT(tapx_solution_size(sol) == 2);
  tapx_solution_free(sol);

  EXPECT(tapx_anatomy_format(inst, &text) == TAPX_OK);
  EXPECT(strstr(text, "node 1 stem twin 2 3") != NULL);
  tapx_string_free(text);
  EXPECT(tapx_lp_export(inst, &text) == TAPX_OK);
  EXPECT(strstr(text, "Subject To") != NULL);
  tapx_string_free(text);
  tapx_instance_free(inst);

  tapx_instance* bad = NULL;
  EXPECT(tapx_instance_parse("tap 1\nnodes 1\nroot 0\n", &bad) == TAPX_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strlen(tapx_last_error()) > 0);
  EXPECT(tapx_instance_parse(NULL, &bad) == TAPX_ERR_ARGUMENT);

  tapx_instance* infeasible = NULL;
  EXPECT(tapx_instance_parse("tap 1\nnodes 3\nroot 0\nedge 0 1\nedge 1 2\nlink 0 1\n", &infeasible) ==
         TAPX_OK);
  EXPECT(tapx_solve(infeasible, NULL, &sol) == TAPX_ERR_INFEASIBLE);
  tapx_instance_free(infeasible);

  tapx_instance* g1 = NULL;
  tapx_instance* g2 = NULL;
  EXPECT(tapx_instance_generate(12, 0.3, 7, &g1) == TAPX_OK);
  EXPECT(tapx_instance_generate(12, 0.3, 7, &g2) == TAPX_OK);
  char* t1 = NULL;
  char* t2 = NULL;
  tapx_instance_format(g1, &t1);
  tapx_instance_format(g2, &t2);
  EXPECT(strcmp(t1, t2) == 0);
  tapx_string_free(t1);
  tapx_string_free(t2);
  tapx_instance_free(g1);
  tapx_instance_free(g2);
  EXPECT(tapx_instance_generate(1, 0.3, 7, &g1) == TAPX_ERR_ARGUMENT);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
