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

#include "tapx/solver.hpp"

#include <algorithm>
#include <json.hpp>

#include "tapx/deficient.hpp"
#include "tapx/greedy.hpp"
#include "tapx/preprocess.hpp"
#include "tapx/semiclosed.hpp"

namespace tapx {

SolverState::SolverState(const TapInstance& closed, const SolveOptions& opts)
    : inst(closed),
      options(opts),
      anatomy(compute_anatomy(closed)),
      matching(build_m(closed, anatomy)),
      tree(closed),
      in_picked_(closed.link_count(), 0),
      stem_seen_(closed.node_count(), 0) {
  if (options.check) check_anatomy(inst, anatomy);
  stats.matching = static_cast<int>(matching.links.size());
}

void SolverState::pick(std::span<const LinkId> links) {
  for (LinkId id : links) {
    if (in_picked_[id]) continue;
    in_picked_[id] = 1;
    picked.push_back(id);
  }
}

int SolverState::contract(std::span<const LinkId> links, const std::string& kind) {
  int x = tree.contract(links, kind);
  if (!options.check) return x;
  check_tree_invariants(tree);
  const auto& t = inst.tree();
  const auto& hit = tree.history().back().hit;
  for (NodeId s : anatomy.stems) {
    if (stem_seen_[s]) continue;
    bool touches = false, has_s = false;
    for (NodeId v : hit) {
      touches = touches || t.is_ancestor(s, v);
      has_s = has_s || v == s;
    }
    if (!touches) continue;
    ensure(has_s, kind + " contraction enters the subtree of stem " + std::to_string(s) +
                      " without hitting it");
    stem_seen_[s] = 1;
  }
  return x;
}

void contract_chosen(SolverState& state, int v, std::span<const LinkId> cover) {
  const TreeView& view = state.tree.view();
  ensure(is_fitting_cover(view, v, cover), "subtree cover is not fitting");
  std::vector<NodeId> expect;
  for (int x : view.subtree(v))
    expect.insert(expect.end(), view.members(x).begin(), view.members(x).end());
  std::sort(expect.begin(), expect.end());
  state.pick(cover);
  state.contract(cover, "subtree");
  ensure(state.tree.history().back().hit == expect, "contraction does not match the subtree");
}

CoverSolution solve_closed(const TapInstance& closed, const SolveOptions& options) {
  if (!validate_feasible(closed)) throw InfeasibleError("some tree edge has no covering link");
  SolverState state(closed, options);
  preprocessing_step1(state);
  preprocessing_step2(state);
  while (!state.tree.single_node()) {
    saturate_greedy(state);
    if (state.tree.single_node()) break;
    if (options.check) check_saturated(state.tree.view(), state.matching.links);
    auto choice = algorithm2(state);
    contract_chosen(state, choice.v, choice.cover);
    ++state.stats.iterations;
  }
  ensure(verify_cover(closed, state.picked), "result is not a cover");
  if (options.check) {
    auto bad = audit_stems(closed, state.anatomy, state.tree.history());
    ensure(!bad, bad.value_or(""));
  }
  CoverSolution out;
  out.picked_closed = state.picked;
  std::sort(out.picked_closed.begin(), out.picked_closed.end());
  out.picked = expand_to_input(closed, out.picked_closed);
  out.trace = std::move(state.trace);
  out.stats = state.stats;
  return out;
}

CoverSolution solve(const TapInstance& inst, const SolveOptions& options) {
  if (!validate_feasible(inst)) throw InfeasibleError("some tree edge has no covering link");
  TapInstance closed = shadow_close(inst);
  return solve_closed(closed, options);
}

std::string trace_to_jsonl(const TapInstance& inst, std::span<const TraceRecord> trace) {
  auto pairs = [&](const std::vector<LinkId>& ids) {
    auto arr = nlohmann::json::array();
    for (LinkId id : ids) arr.push_back({inst.link(id).u, inst.link(id).w});
    return arr;
  };
  std::string out;
  for (size_t i = 0; i < trace.size(); ++i) {
    const TraceRecord& r = trace[i];
    nlohmann::ordered_json j;
    j["step"] = i;
    j["kind"] = r.kind;
    j["links"] = pairs(r.links);
    if (!r.removed.empty()) j["removed"] = pairs(r.removed);
    if (!r.hit.empty()) j["hit"] = r.hit;
    if (r.node >= 0) j["node"] = r.node;
    if (r.credit_half >= 0) j["credit"] = r.credit_half / 2.0;
    if (r.cost >= 0) j["cost"] = r.cost;
    if (!r.detail.empty()) j["detail"] = r.detail;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace tapx
