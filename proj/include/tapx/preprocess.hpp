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

#ifndef TAPX_PREPROCESS_HPP
#define TAPX_PREPROCESS_HPP

#include <optional>
#include <span>
#include <vector>

#include "tapx/solver.hpp"

namespace tapx {

// A 4-leaf, 2-stem semiclosed subtree that is expensive to handle later.
// Labels: w1w2 is its matching link, u1 and u2 are exposed.
struct BadTwoStem {
  NodeId v = -1;
  NodeId s1 = -1, s2 = -1;
  NodeId u1 = -1, w1 = -1, u2 = -1, w2 = -1;
  std::vector<LinkId> cover;    // some cover of the subtree with 3 links
  std::vector<LinkId> fitting;  // the same cover clipped to the subtree
};

// Checked on the original tree.
std::optional<BadTwoStem> is_bad_2stem(const TapInstance& inst, const Anatomy& anatomy,
                                       const Matching& matching, NodeId v);

// Outermost bad 2-stem subtrees, ascending root id.
std::vector<BadTwoStem> maximal_bad_2stem_trees(const TapInstance& inst, const Anatomy& anatomy,
                                                const Matching& matching);

// Clips each link to the part of its path inside the subtree at v.
std::vector<LinkId> find_fitting_cover_3(const TapInstance& inst, NodeId v,
                                         std::span<const LinkId> cover);

void preprocessing_step1(SolverState& state);
void preprocessing_step2(SolverState& state);

}  // namespace tapx

#endif  // TAPX_PREPROCESS_HPP
