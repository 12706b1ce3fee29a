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

#ifndef TAPX_MATCHING_HPP
#define TAPX_MATCHING_HPP

#include <span>
#include <utility>
#include <vector>

#include "tapx/anatomy.hpp"

namespace tapx {

// Maximum-cardinality matching on a general graph with vertices 0..n-1
// (Edmonds, via Boost.Graph). Returns indices into `edges`, ascending. Edges
// are inserted in the given order, so the result is a function of that order.
std::vector<int> maximum_matching(int vertex_count, std::span<const std::pair<int, int>> edges);

struct Matching {
  std::vector<LinkId> links;   // ascending
  std::vector<NodeId> exposed; // leaves not covered by links, ascending
  std::vector<NodeId> mate;    // per node, -1 if none
  std::vector<LinkId> mate_link;
};

// Maximum matching on the leaves using regular leaf-to-leaf links only.
Matching build_m(const TapInstance& inst, const Anatomy& anatomy);

}  // namespace tapx

#endif  // TAPX_MATCHING_HPP
