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

#include "tapx/credits.hpp"

#include <sstream>

namespace tapx {

std::string CreditBreakdown::describe() const {
  std::ostringstream out;
  out << "3/2*" << matching_links << " + " << compounds << " compound + " << exposed_leaves
      << " exposed leaf + " << (root ? 1 : 0) << " root = " << half_units / 2
      << (half_units % 2 ? ".5" : "");
  return out.str();
}

std::vector<char> credit_nodes(const TreeView& view, std::span<const LinkId> matching) {
  auto exposed = exposed_mask(view, matching);
  std::vector<char> out(view.size(), 0);
  for (int x = 0; x < view.size(); ++x) {
    if (view.is_compound(x)) out[x] = 1;
    else if (view.is_original(x) && exposed[x]) out[x] = 1;
    else if (x == view.root() && view.is_original(x)) out[x] = 1;
  }
  return out;
}

CreditBreakdown integral_credit(const TreeView& view, std::span<const LinkId> matching,
                                std::span<const LinkId> links) {
  std::vector<char> in(view.size(), 0);
  for (LinkId id : links) {
    if (view.is_internal(id)) continue;
    for (int x : view.link_path(id)) in[x] = 1;
  }
  CreditBreakdown cb;
  auto exposed = exposed_mask(view, matching);
  for (int x = 0; x < view.size(); ++x) {
    if (!in[x]) continue;
    cb.nodes.push_back(x);
    if (view.is_compound(x)) ++cb.compounds;
    else if (view.is_original(x) && exposed[x]) ++cb.exposed_leaves;
    else if (x == view.root() && view.is_original(x)) cb.root = true;
  }
  for (LinkId id : matching) {
    if (view.is_internal(id)) continue;
    bool inside = true;
    for (int x : view.link_path(id)) inside = inside && in[x];
    if (inside) ++cb.matching_links;
  }
  cb.half_units = 3 * cb.matching_links + 2 * (cb.compounds + cb.exposed_leaves + (cb.root ? 1 : 0));
  return cb;
}

}  // namespace tapx
