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

#ifndef TAPX_SOLVER_HPP
#define TAPX_SOLVER_HPP

#include <span>
#include <string>
#include <vector>

#include "tapx/anatomy.hpp"
#include "tapx/contract.hpp"
#include "tapx/matching.hpp"

namespace tapx {

struct SolveOptions {
  bool check = true;   // full invariant suite every iteration
  bool trace = false;  // collect audit records
  int max_greedy = 5;  // largest link set tried by greedy contraction
};

struct TraceRecord {
  std::string kind;            // prep1 prep2 greedy latch mnew-swap alg2-pick
  std::vector<LinkId> links;   // closed link ids
  std::vector<LinkId> removed; // mnew-swap only
  std::vector<NodeId> hit;     // original nodes merged, when contracting
  NodeId node = -1;            // subtree root / compound representative
  int credit_half = -1;        // integral credit in half units, when evaluated
  int cost = -1;               // links plus one new compound
  std::string detail;
};

struct SolveStats {
  int iterations = 0;  // main-loop rounds ending in a subtree contraction
  int greedy = 0;
  int prep1 = 0;
  int prep2 = 0;
  int latches = 0;
  int swaps = 0;
  int matching = 0;
};

// Mutable state shared by the preprocessing, greedy and subtree steps.
class SolverState {
 public:
  SolverState(const TapInstance& closed, const SolveOptions& options);

  const TapInstance& inst;
  SolveOptions options;
  Anatomy anatomy;
  Matching matching;
  ContractedTree tree;
  std::vector<LinkId> picked;
  std::vector<TraceRecord> trace;
  SolveStats stats;

  void pick(std::span<const LinkId> links);
  // Contracts and runs the per-event checks. Returns the new view node.
  int contract(std::span<const LinkId> links, const std::string& kind);
  void record(TraceRecord rec) {
    if (options.trace) trace.push_back(std::move(rec));
  }

 private:
  std::vector<char> in_picked_;
  std::vector<char> stem_seen_;
};

struct CoverSolution {
  std::vector<int> picked;          // input-link ids
  std::vector<LinkId> picked_closed; // ids in the closed instance
  std::vector<TraceRecord> trace;
  SolveStats stats;
};

// Accepts a raw or closed instance; closes it first.
CoverSolution solve(const TapInstance& inst, const SolveOptions& options = {});

// Same, but the caller supplies the closed instance the ids refer to.
CoverSolution solve_closed(const TapInstance& closed, const SolveOptions& options = {});

// Adds the subtree cover and contracts the subtree rooted at view node v.
void contract_chosen(SolverState& state, int v, std::span<const LinkId> cover);

std::string trace_to_jsonl(const TapInstance& inst, std::span<const TraceRecord> trace);

}  // namespace tapx

#endif  // TAPX_SOLVER_HPP
