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

#include "tapx/contract.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace tapx {

TreeView::TreeView(const TapInstance& inst, std::span<const int> owner,
                   std::span<const int> latched_owners)
    : inst_(&inst), owner_(owner.begin(), owner.end()) {
  const auto& t = inst.tree();
  int n = t.node_count();
  std::map<int, NodeId> first;  // label -> smallest member
  for (NodeId v = 0; v < n; ++v) first.try_emplace(owner_[v], v);
  std::vector<std::pair<NodeId, int>> order;
  for (auto [label, v] : first) order.emplace_back(v, label);
  std::sort(order.begin(), order.end());
  k_ = static_cast<int>(order.size());
  std::map<int, int> index;
  for (int i = 0; i < k_; ++i) index[order[i].second] = i;
  cls_.resize(n);
  members_.assign(k_, {});
  for (NodeId v = 0; v < n; ++v) {
    cls_[v] = index.at(owner_[v]);
    members_[cls_[v]].push_back(v);
  }
  latched_.assign(k_, 0);
  for (int label : latched_owners)
    if (auto it = index.find(label); it != index.end()) latched_[it->second] = 1;

  top_.assign(k_, -1);
  std::vector<int> exits(k_, 0);
  for (NodeId v = 0; v < n; ++v) {
    int x = cls_[v];
    if (top_[x] < 0 || t.depth(v) < t.depth(top_[x])) top_[x] = v;
    if (v == t.root() || cls_[t.parent(v)] != x) ++exits[x];
  }
  for (int x = 0; x < k_; ++x) ensure(exits[x] == 1, "merged node set is not connected");

  root_ = cls_[t.root()];
  parent_.assign(k_, -1);
  children_.assign(k_, {});
  for (int x = 0; x < k_; ++x) {
    if (x == root_) continue;
    parent_[x] = cls_[t.parent(top_[x])];
    children_[parent_[x]].push_back(x);
  }
  depth_.assign(k_, 0);
  height_.assign(k_, 0);
  tin_.assign(k_, 0);
  sub_.assign(k_, 1);
  preorder_.clear();
  std::vector<std::pair<int, size_t>> stack{{root_, 0}};
  preorder_.push_back(root_);
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < children_[x].size()) {
      int c = children_[x][i++];
      depth_[c] = depth_[x] + 1;
      tin_[c] = static_cast<int>(preorder_.size());
      preorder_.push_back(c);
      stack.push_back({c, 0});
    } else {
      int done = x;
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().first;
        sub_[p] += sub_[done];
        height_[p] = std::max(height_[p], height_[done] + 1);
      }
    }
  }

  int m = inst.link_count();
  img_a_.resize(m);
  img_b_.resize(m);
  pair_.assign(static_cast<size_t>(k_) * k_, -1);
  incident_.assign(k_, {});
  for (const Link& l : inst.links()) {
    int a = cls_[l.u], b = cls_[l.w];
    img_a_[l.id] = a;
    img_b_[l.id] = b;
    if (a == b) continue;
    incident_[a].push_back(l.id);
    incident_[b].push_back(l.id);
    LinkId& s1 = pair_[static_cast<size_t>(a) * k_ + b];
    if (s1 < 0) {
      s1 = l.id;
      pair_[static_cast<size_t>(b) * k_ + a] = l.id;
    }
  }
}

TreeView TreeView::identity(const TapInstance& inst) {
  std::vector<int> owner(inst.node_count());
  for (NodeId v = 0; v < inst.node_count(); ++v) owner[v] = v;
  return TreeView(inst, owner);
}

std::optional<LinkId> TreeView::link_between(int a, int b) const {
  if (a == b) return std::nullopt;
  LinkId id = pair_[static_cast<size_t>(a) * k_ + b];
  if (id < 0) return std::nullopt;
  return id;
}

int TreeView::lca(int a, int b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) a = parent_[a], b = parent_[b];
  return a;
}

std::vector<int> TreeView::path(int a, int b) const {
  std::vector<int> left, right;
  while (depth_[a] > depth_[b]) left.push_back(a), a = parent_[a];
  while (depth_[b] > depth_[a]) right.push_back(b), b = parent_[b];
  while (a != b) {
    left.push_back(a), a = parent_[a];
    right.push_back(b), b = parent_[b];
  }
  left.push_back(a);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

std::vector<int> TreeView::leaves() const {
  std::vector<int> out;
  for (int x = 0; x < k_; ++x)
    if (is_leaf(x)) out.push_back(x);
  return out;
}

std::vector<int> TreeView::bottom_up_order() const {
  std::vector<int> out(k_);
  for (int x = 0; x < k_; ++x) out[x] = x;
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return std::make_tuple(height_[a], -depth_[a], rep(a)) <
           std::make_tuple(height_[b], -depth_[b], rep(b));
  });
  return out;
}

int up_current(const TreeView& view, int x) {
  int best = -1;
  for (LinkId id : view.incident(x)) {
    auto [a, b] = view.image(id);
    int y = a == x ? b : a;
    if (view.is_ancestor(y, x) && (best < 0 || view.depth(y) < view.depth(best))) best = y;
  }
  ensure(best >= 0, "leaf has no link to an ancestor");
  return best;
}

std::vector<LinkId> image_links(const TreeView& view, std::span<const LinkId> links) {
  std::vector<LinkId> out;
  for (LinkId id : links)
    if (!view.is_internal(id)) out.push_back(id);
  return out;
}

std::vector<char> exposed_mask(const TreeView& view, std::span<const LinkId> matching) {
  std::vector<char> out(view.size(), 0);
  for (int x = 0; x < view.size(); ++x) out[x] = view.is_leaf(x);
  for (LinkId id : matching) {
    if (view.is_internal(id)) continue;
    auto [a, b] = view.image(id);
    out[a] = out[b] = 0;
  }
  return out;
}

bool is_exposed(const TreeView& view, std::span<const LinkId> matching, int x) {
  return exposed_mask(view, matching)[x] != 0;
}

std::vector<LinkId> maximal_links(const TreeView& view) {
  std::vector<LinkId> out;
  const TapInstance& inst = view.instance();
  for (const Link& l : inst.links()) {
    if (view.is_internal(l.id)) continue;
    auto [a0, b0] = view.image(l.id);
    if (view.link_between(a0, b0) != l.id) continue;
    bool maximal = true;
    for (int side = 0; side < 2 && maximal; ++side) {
      int a = side == 0 ? a0 : b0;
      int b = side == 0 ? b0 : a0;
      // The neighbour of a that lies on the path toward b.
      int toward = -1;
      if (view.is_ancestor(a, b)) {
        for (int c : view.children(a))
          if (view.is_ancestor(c, b)) toward = c;
      } else {
        toward = view.parent(a);
      }
      auto ext = [&](int x) {
        if (x >= 0 && x != toward && view.link_between(x, b)) maximal = false;
      };
      ext(view.parent(a));
      for (int c : view.children(a)) ext(c);
    }
    if (maximal) out.push_back(l.id);
  }
  return out;
}

ContractedTree::ContractedTree(const TapInstance& inst)
    : inst_(&inst), owner_(inst.node_count()), view_(TreeView::identity(inst)) {
  for (NodeId v = 0; v < inst.node_count(); ++v) owner_[v] = v;
}

int ContractedTree::contract(std::span<const LinkId> links, const std::string& kind) {
  // marked: nodes on some path; joined: the edge to the parent is on some path.
  std::vector<char> marked(view_.size(), 0), joined(view_.size(), 0);
  bool any = false;
  for (LinkId id : links) {
    if (view_.is_internal(id)) continue;
    auto p = view_.link_path(id);
    for (size_t i = 0; i < p.size(); ++i) {
      marked[p[i]] = 1;
      if (i + 1 < p.size()) joined[view_.parent(p[i]) == p[i + 1] ? p[i] : p[i + 1]] = 1;
    }
    any = true;
  }
  ensure(any, "contraction of links with empty image paths");
  int tops = 0;
  for (int x = 0; x < view_.size(); ++x)
    if (marked[x] && !joined[x]) ++tops;
  ensure(tops == 1, "contracted path union is disconnected");

  ContractionEvent ev;
  ev.kind = kind;
  ev.links.assign(links.begin(), links.end());
  NodeId label = inst_->node_count();
  for (NodeId v = 0; v < inst_->node_count(); ++v) {
    if (!marked[view_.node_of(v)]) continue;
    ev.hit.push_back(v);
    label = std::min(label, v);
  }
  for (NodeId v : ev.hit) owner_[v] = label;
  ev.compound_rep = label;
  ev.compound_id = static_cast<int>(history_.size());
  history_.push_back(std::move(ev));
  view_ = TreeView(*inst_, owner_);
  return view_.node_of(label);
}

void check_tree_invariants(const ContractedTree& tree) {
  const TreeView& view = tree.view();
  const TapInstance& inst = tree.instance();
  const auto& t = inst.tree();
  size_t total = 0;
  for (int x = 0; x < view.size(); ++x) {
    total += view.members(x).size();
    for (NodeId v : view.members(x)) ensure(view.node_of(v) == x, "member/container mismatch");
    if (x != view.root())
      ensure(view.node_of(t.parent(view.top(x))) == view.parent(x), "view parent mismatch");
    if (view.is_compound(x) && view.is_leaf(x)) {
      // A compound leaf holds the whole original subtree of each member.
      for (NodeId v : view.members(x))
        for (NodeId c : t.children(v))
          ensure(view.node_of(c) == x, "compound leaf misses part of a member's subtree");
    }
  }
  ensure(total == static_cast<size_t>(inst.node_count()), "containers do not partition the nodes");
  ensure(view.node_of(t.root()) == view.root(), "root container is not the view root");
  for (const Link& l : inst.links()) {
    auto [a, b] = view.image(l.id);
    ensure(a == view.node_of(l.u) && b == view.node_of(l.w), "stale link image");
  }
}

std::optional<std::string> audit_stems(const TapInstance& inst, const Anatomy& anatomy,
                                       std::span<const ContractionEvent> history) {
  const auto& t = inst.tree();
  for (NodeId s : anatomy.stems) {
    for (const auto& ev : history) {
      bool touches = false, has_s = false;
      for (NodeId v : ev.hit) {
        if (t.is_ancestor(s, v)) touches = true;
        if (v == s) has_s = true;
      }
      if (!touches) continue;
      if (!has_s)
        return "contraction " + std::to_string(ev.compound_id) + " (" + ev.kind +
               ") enters the subtree of stem " + std::to_string(s) + " without hitting it";
      break;
    }
  }
  return std::nullopt;
}

}  // namespace tapx
