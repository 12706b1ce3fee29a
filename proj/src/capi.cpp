// Copyright 2026 The tapx Authors
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

#include "tapx/tapx.h"

#include <cstring>
#include <memory>
#include <optional>

#include "tapx/oracle.hpp"
#include "tapx/solver.hpp"

struct tapx_instance {
  tapx::TapInstance raw;
  mutable std::shared_ptr<const tapx::TapInstance> closed;

  const std::shared_ptr<const tapx::TapInstance>& closure() const {
    if (!closed) closed = std::make_shared<const tapx::TapInstance>(tapx::shadow_close(raw));
    return closed;
  }
};

struct tapx_solution {
  std::shared_ptr<const tapx::TapInstance> raw;
  std::shared_ptr<const tapx::TapInstance> closed;
  tapx::CoverSolution sol;
};

namespace {

thread_local std::string g_error;

tapx_status fail(tapx_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

template <typename F>
tapx_status guarded(F&& f) {
  try {
    g_error.clear();
    return f();
  } catch (const tapx::ParseError& e) {
    return fail(TAPX_ERR_PARSE, e.what());
  } catch (const tapx::InfeasibleError& e) {
    return fail(TAPX_ERR_INFEASIBLE, e.what());
  } catch (const tapx::InvariantViolation& e) {
    return fail(TAPX_ERR_ASSERTION, e.what());
  } catch (const tapx::BudgetExceeded& e) {
    return fail(TAPX_ERR_BUDGET, e.what());
  } catch (const std::exception& e) {
    return fail(TAPX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TAPX_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

tapx_status give_string(const std::string& s, char** out) {
  *out = dup(s);
  return *out ? TAPX_OK : fail(TAPX_ERR_INTERNAL, "out of memory");
}

tapx_solution* wrap(const tapx_instance* inst, tapx::CoverSolution sol) {
  auto* s = new tapx_solution;
  s->raw = std::make_shared<const tapx::TapInstance>(inst->raw);
  s->closed = inst->closure();
  s->sol = std::move(sol);
  return s;
}

}  // namespace

extern "C" {

const char* tapx_last_error(void) { return g_error.c_str(); }
const char* tapx_version(void) { return "1.0.0"; }
void tapx_string_free(char* s) { std::free(s); }

tapx_status tapx_instance_parse(const char* text, tapx_instance** out) {
  if (!text || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto inst = std::make_unique<tapx_instance>();
    inst->raw = tapx::parse_instance(text);
    *out = inst.release();
    return TAPX_OK;
  });
}

tapx_status tapx_instance_generate(int nodes, double density, uint64_t seed, tapx_instance** out) {
  if (!out || nodes < 2 || !(density > 0.0 && density <= 1.0))
    return fail(TAPX_ERR_ARGUMENT, "need nodes >= 2 and 0 < density <= 1");
  return guarded([&] {
    auto inst = std::make_unique<tapx_instance>();
    inst->raw = tapx::generate_random(nodes, density, seed);
    *out = inst.release();
    return TAPX_OK;
  });
}

void tapx_instance_free(tapx_instance* inst) { delete inst; }

tapx_status tapx_instance_format(const tapx_instance* inst, char** out) {
  if (!inst || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] { return give_string(tapx::format_instance(inst->raw), out); });
}

int tapx_instance_node_count(const tapx_instance* inst) { return inst ? inst->raw.node_count() : -1; }

int tapx_instance_input_link_count(const tapx_instance* inst) {
  return inst ? static_cast<int>(inst->raw.input_links().size()) : -1;
}

int tapx_instance_closed_link_count(const tapx_instance* inst) {
  if (!inst) return -1;
  int n = -1;
  guarded([&] {
    n = inst->closure()->link_count();
    return TAPX_OK;
  });
  return n;
}

int tapx_instance_is_feasible(const tapx_instance* inst) {
  return inst && tapx::validate_feasible(inst->raw) ? 1 : 0;
}

int tapx_leaf_lower_bound(const tapx_instance* inst) {
  return inst ? tapx::leaf_lower_bound(inst->raw) : -1;
}

tapx_status tapx_anatomy_format(const tapx_instance* inst, char** out) {
  if (!inst || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (!tapx::validate_feasible(inst->raw))
      throw tapx::InfeasibleError("some tree edge has no covering link");
    const auto& closed = *inst->closure();
    auto an = tapx::compute_anatomy(closed);
    return give_string(tapx::format_anatomy(closed, an), out);
  });
}

tapx_status tapx_lp_export(const tapx_instance* inst, char** out) {
  if (!inst || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] { return give_string(tapx::export_lp0(*inst->closure()), out); });
}

void tapx_solve_options_default(tapx_solve_options* options) {
  if (!options) return;
  tapx::SolveOptions d;
  options->check = d.check;
  options->trace = d.trace;
  options->max_greedy = d.max_greedy;
}

tapx_status tapx_solve(const tapx_instance* inst, const tapx_solve_options* options,
                       tapx_solution** out) {
  if (!inst || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  tapx::SolveOptions opts;
  if (options) {
    if (options->max_greedy < 1) return fail(TAPX_ERR_ARGUMENT, "max_greedy must be positive");
    opts.check = options->check != 0;
    opts.trace = options->trace != 0;
    opts.max_greedy = options->max_greedy;
  }
  return guarded([&] {
    if (!tapx::validate_feasible(inst->raw))
      throw tapx::InfeasibleError("some tree edge has no covering link");
    *out = wrap(inst, tapx::solve_closed(*inst->closure(), opts));
    return TAPX_OK;
  });
}

tapx_status tapx_two_approx(const tapx_instance* inst, tapx_solution** out) {
  if (!inst || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (!tapx::validate_feasible(inst->raw))
      throw tapx::InfeasibleError("some tree edge has no covering link");
    *out = wrap(inst, tapx::two_approx_closed(*inst->closure()));
    return TAPX_OK;
  });
}

tapx_status tapx_exact(const tapx_instance* inst, int max_size, int64_t budget,
                       tapx_exact_info* info, tapx_solution** out) {
  if (!inst || !info) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (!tapx::validate_feasible(inst->raw))
      throw tapx::InfeasibleError("some tree edge has no covering link");
    std::optional<int> bound;
    if (max_size >= 0) bound = max_size;
    auto res = budget > 0 ? tapx::exact_opt(*inst->closure(), bound, budget)
                          : tapx::exact_opt(*inst->closure(), bound);
    info->exact = res.exact;
    info->size = res.size;
    info->lower = res.lower;
    info->upper = res.upper;
    info->nodes = res.nodes;
    if (out) {
      tapx::CoverSolution sol;
      sol.picked_closed = res.witness;
      sol.picked = tapx::expand_to_input(*inst->closure(), res.witness);
      *out = wrap(inst, std::move(sol));
    }
    return TAPX_OK;
  });
}

void tapx_solution_free(tapx_solution* sol) { delete sol; }

int tapx_solution_size(const tapx_solution* sol) {
  return sol ? static_cast<int>(sol->sol.picked.size()) : -1;
}

int tapx_solution_closed_size(const tapx_solution* sol) {
  return sol ? static_cast<int>(sol->sol.picked_closed.size()) : -1;
}

int tapx_solution_links(const tapx_solution* sol, int* ids, int cap) {
  if (!sol) return -1;
  int n = static_cast<int>(sol->sol.picked.size());
  for (int i = 0; ids && i < n && i < cap; ++i) ids[i] = sol->sol.picked[i];
  return n;
}

tapx_status tapx_solution_format(const tapx_solution* sol, char** out) {
  if (!sol || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] { return give_string(tapx::format_solution(*sol->raw, sol->sol.picked), out); });
}

tapx_status tapx_solution_trace(const tapx_solution* sol, char** out) {
  if (!sol || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] { return give_string(tapx::trace_to_jsonl(*sol->closed, sol->sol.trace), out); });
}

tapx_status tapx_solution_stats(const tapx_solution* sol, tapx_stats* out) {
  if (!sol || !out) return fail(TAPX_ERR_ARGUMENT, "null argument");
  const auto& s = sol->sol.stats;
  *out = tapx_stats{s.iterations, s.greedy, s.prep1, s.prep2, s.latches, s.swaps, s.matching};
  return TAPX_OK;
}

tapx_status tapx_verify(const tapx_instance* inst, const char* cover_text, int* ok,
                        int* uncovered_child, int* uncovered_parent) {
  if (!inst || !cover_text || !ok) return fail(TAPX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto cover = tapx::parse_cover(inst->raw, cover_text);
    auto e = tapx::first_uncovered_edge(inst->raw, cover);
    *ok = e ? 0 : 1;
    if (uncovered_child) *uncovered_child = e ? *e : -1;
    if (uncovered_parent) *uncovered_parent = e ? inst->raw.tree().parent(*e) : -1;
    return TAPX_OK;
  });
}

}  // extern "C"
