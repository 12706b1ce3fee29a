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

#include "tapx/semiclosed.hpp"

#include <algorithm>

namespace tapx {

namespace {

bool semiclosed_with(const TreeView& view, std::span<const LinkId> matching,
                     const std::vector<char>& exposed, int v) {
  for (LinkId id : matching) {
    if (view.is_internal(id)) continue;
    auto [a, b] = view.image(id);
    if (view.in_subtree(v, a) != view.in_subtree(v, b)) return false;
  }
  for (int x : view.subtree(v)) {
    if (!exposed[x]) continue;
    for (LinkId id : view.incident(x)) {
      auto [a, b] = view.image(id);
      if (!view.in_subtree(v, a == x ? b : a)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_semiclosed(const TreeView& view, std::span<const LinkId> matching, int v) {
  return semiclosed_with(view, matching, exposed_mask(view, matching), v);
}

int minimally_semiclosed(const TreeView& view, std::span<const LinkId> matching) {
  auto exposed = exposed_mask(view, matching);
  for (int v : view.bottom_up_order())
    if (semiclosed_with(view, matching, exposed, v)) return v;
  ensure(false, "no semiclosed subtree, not even the whole tree");
  return -1;
}

std::vector<LinkId> gamma(const TreeView& view, std::span<const LinkId> matching, int v) {
  std::vector<LinkId> out;
  for (LinkId id : matching) {
    if (view.is_internal(id)) continue;
    auto [a, b] = view.image(id);
    if (view.in_subtree(v, a) && view.in_subtree(v, b)) out.push_back(id);
  }
  auto exposed = exposed_mask(view, matching);
  for (int x : view.subtree(v)) {
    if (!exposed[x]) continue;
    auto id = view.link_between(up_current(view, x), x);
    ensure(id.has_value(), "up link vanished");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_fitting_cover(const TreeView& view, int v, std::span<const LinkId> links) {
  std::vector<char> covered(view.size(), 0);
  for (LinkId id : links) {
    if (view.is_internal(id)) continue;
    auto p = view.link_path(id);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      int child = view.parent(p[i]) == p[i + 1] ? p[i] : p[i + 1];
      if (child == v || !view.in_subtree(v, child)) return false;
      covered[child] = 1;
    }
  }
  for (int x : view.subtree(v))
    if (x != v && !covered[x]) return false;
  return true;
}

}  // namespace tapx
