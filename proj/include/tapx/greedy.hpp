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

#ifndef TAPX_GREEDY_HPP
#define TAPX_GREEDY_HPP

#include <optional>
#include <span>
#include <vector>

#include "tapx/credits.hpp"
#include "tapx/solver.hpp"

namespace tapx {

struct GreedyChoice {
  std::vector<LinkId> links;  // ascending
  CreditBreakdown credit;
};

// Smallest, then lexicographically first, set of at most max_size candidate
// links whose image paths form a connected union with integral credit at
// least |J| + 1. Candidates must have non-internal images.
std::optional<GreedyChoice> find_credit_contraction(const TreeView& view,
                                                    std::span<const LinkId> matching,
                                                    std::span<const LinkId> candidates,
                                                    int max_size);

// Same search over the maximal links of the current tree.
std::optional<GreedyChoice> find_greedy_contraction(const SolverState& state);

// Applies greedy contractions until none applies. Returns how many.
int saturate_greedy(SolverState& state);

// Post-saturation facts: every matching image joins original leaves along
// original nodes only, and no link joins two exposed leaves.
void check_saturated(const TreeView& view, std::span<const LinkId> matching);

}  // namespace tapx

#endif  // TAPX_GREEDY_HPP
