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

#ifndef TAPX_ANATOMY_HPP
#define TAPX_ANATOMY_HPP

#include <map>
#include <string>
#include <vector>

#include "tapx/instance.hpp"

namespace tapx {

enum class LinkKind : char { kRegular, kTwin, kBuddy };

// Structural classification of the original closed instance. Computed once.
struct Anatomy {
  std::vector<NodeId> leaves;
  std::vector<char> is_leaf;
  std::vector<NodeId> stems;
  std::vector<char> is_stem;
  std::map<NodeId, LinkId> twin;      // stem -> link joining its two leaves
  std::vector<NodeId> stem_of;        // leaf -> its stem, or -1
  std::vector<NodeId> buds;
  std::map<NodeId, LinkId> buddy;     // bud b0 -> link b1b2
  std::map<NodeId, NodeId> bud_third; // bud b0 -> b2
  std::map<NodeId, std::vector<NodeId>> r_special;
  std::vector<NodeId> r_nonspecial;
  std::vector<NodeId> up;             // leaf -> highest ancestor joined to it; -1 elsewhere
  std::vector<LinkKind> kind;         // per link
  std::vector<LinkId> e_reg;
  std::vector<LinkId> maximal_links;
};

// Expects a shadow-closed feasible instance.
Anatomy compute_anatomy(const TapInstance& inst);

bool is_overlapping_pair(const TapInstance& inst, LinkId l1, LinkId l2);

// Links whose tree path is not strictly inside another link's path. Among
// links with the same path (impossible after pair dedup) the smallest id wins.
std::vector<LinkId> maximal_links(const TapInstance& inst);

// Throws InvariantViolation when a structural fact about the anatomy fails.
void check_anatomy(const TapInstance& inst, const Anatomy& anatomy);

// One labeled line per node / link.
std::string format_anatomy(const TapInstance& inst, const Anatomy& anatomy);

}  // namespace tapx

#endif  // TAPX_ANATOMY_HPP
