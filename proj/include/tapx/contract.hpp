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

#ifndef TAPX_CONTRACT_HPP
#define TAPX_CONTRACT_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tapx/anatomy.hpp"

namespace tapx {

// A tree obtained from the original tree by merging connected node sets.
// View nodes are indexed 0..size()-1 in ascending order of their smallest
// member. Merged sets are either compounds (built by contraction) or latched
// nodes (auxiliary, no credit).
class TreeView {
 public:
  // owner[v] labels the class of original node v; classes must be connected.
  // latched_owners lists labels of latched classes.
  TreeView(const TapInstance& inst, std::span<const int> owner,
           std::span<const int> latched_owners = {});
  static TreeView identity(const TapInstance& inst);

  const TapInstance& instance() const { return *inst_; }
  int size() const { return k_; }
  int root() const { return root_; }
  int node_of(NodeId v) const { return cls_[v]; }
  int parent(int x) const { return parent_[x]; }
  const std::vector<int>& children(int x) const { return children_[x]; }
  int depth(int x) const { return depth_[x]; }
  int height(int x) const { return height_[x]; }
  int degree(int x) const {
    return static_cast<int>(children_[x].size()) + (x == root_ ? 0 : 1);
  }
  bool is_ancestor(int a, int b) const { return tin_[a] <= tin_[b] && tin_[b] < tin_[a] + sub_[a]; }
  bool is_leaf(int x) const { return x != root_ && children_[x].empty(); }
  bool is_latched(int x) const { return latched_[x]; }
  bool is_compound(int x) const { return members_[x].size() > 1 && !latched_[x]; }
  bool is_original(int x) const { return members_[x].size() == 1 && !latched_[x]; }
  NodeId rep(int x) const { return members_[x].front(); }
  NodeId top(int x) const { return top_[x]; }
  const std::vector<NodeId>& members(int x) const { return members_[x]; }
  const std::vector<int>& owner() const { return owner_; }

  // View endpoints of a link; first == second when the image is internal.
  std::pair<int, int> image(LinkId id) const { return {img_a_[id], img_b_[id]}; }
  bool is_internal(LinkId id) const { return img_a_[id] == img_b_[id]; }
  // Smallest original link whose image joins a and b.
  std::optional<LinkId> link_between(int a, int b) const;
  // Links with a non-internal image incident to x.
  const std::vector<LinkId>& incident(int x) const { return incident_[x]; }

  int lca(int a, int b) const;
  std::vector<int> path(int a, int b) const;
  std::vector<int> link_path(LinkId id) const { return path(img_a_[id], img_b_[id]); }
  std::vector<int> leaves() const;
  // Nodes of the subtree rooted at v, preorder.
  std::span<const int> subtree(int v) const {
    return std::span<const int>(preorder_).subspan(tin_[v], sub_[v]);
  }
  // All nodes by height, then deeper first, then smaller representative.
  std::vector<int> bottom_up_order() const;
  // True when the node on the view path is in the subtree of v.
  bool in_subtree(int v, int x) const { return is_ancestor(v, x); }

 private:
  const TapInstance* inst_;
  int k_ = 0, root_ = 0;
  std::vector<int> owner_, cls_, parent_, depth_, height_, tin_, sub_, preorder_;
  std::vector<char> latched_;
  std::vector<NodeId> top_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<std::vector<int>> children_;
  std::vector<int> img_a_, img_b_;
  std::vector<LinkId> pair_;
  std::vector<std::vector<LinkId>> incident_;
};

// Highest proper ancestor of x joined to x by a link image.
int up_current(const TreeView& view, int x);

// Non-internal images of the given links.
std::vector<LinkId> image_links(const TreeView& view, std::span<const LinkId> links);

// Leaf x is exposed when no non-internal image of `matching` ends at x.
bool is_exposed(const TreeView& view, std::span<const LinkId> matching, int x);
std::vector<char> exposed_mask(const TreeView& view, std::span<const LinkId> matching);

// Maximal links of a view: the smallest id per image pair, keeping pairs
// whose path is not strictly inside another image path. Needs shadow closure.
std::vector<LinkId> maximal_links(const TreeView& view);

struct ContractionEvent {
  std::string kind;
  std::vector<LinkId> links;
  std::vector<NodeId> hit;  // original nodes merged
  NodeId compound_rep = -1;
  int compound_id = -1;
};

// The current tree T/F with its contraction history.
class ContractedTree {
 public:
  explicit ContractedTree(const TapInstance& inst);

  const TapInstance& instance() const { return *inst_; }
  const TreeView& view() const { return view_; }
  bool single_node() const { return view_.size() == 1; }

  // Merges every node on the image paths of `links` into one compound.
  // Throws InvariantViolation if the union is empty or disconnected.
  // Returns the view index of the new compound.
  int contract(std::span<const LinkId> links, const std::string& kind);
  const std::vector<ContractionEvent>& history() const { return history_; }

 private:
  const TapInstance* inst_;
  std::vector<int> owner_;
  TreeView view_;
  std::vector<ContractionEvent> history_;
};

// Partition, parent and compound-leaf closure checks on the current view.
void check_tree_invariants(const ContractedTree& tree);

// First history event touching the subtree of a stem must include the stem.
// Returns a description of the first violation, if any.
std::optional<std::string> audit_stems(const TapInstance& inst, const Anatomy& anatomy,
                                       std::span<const ContractionEvent> history);

}  // namespace tapx

#endif  // TAPX_CONTRACT_HPP
