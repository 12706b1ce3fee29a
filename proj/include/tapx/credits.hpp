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

#ifndef TAPX_CREDITS_HPP
#define TAPX_CREDITS_HPP

#include <span>
#include <string>
#include <vector>

#include "tapx/contract.hpp"
#include "tapx/matching.hpp"

namespace tapx {

// Credits are kept in half units: an enclosed matching link is worth 3,
// every other credit source 2.
struct CreditBreakdown {
  int half_units = 0;
  int matching_links = 0;  // matching images whose whole path lies in the union
  int compounds = 0;
  int exposed_leaves = 0;  // exposed original leaves
  bool root = false;       // root present as an original node
  std::vector<int> nodes;  // view nodes of the path union, ascending

  std::string describe() const;
};

// Per-node credit of the current tree: 1 for compounds, exposed original
// leaves and the original root.
std::vector<char> credit_nodes(const TreeView& view, std::span<const LinkId> matching);

CreditBreakdown integral_credit(const TreeView& view, std::span<const LinkId> matching,
                                std::span<const LinkId> links);

}  // namespace tapx

#endif  // TAPX_CREDITS_HPP
