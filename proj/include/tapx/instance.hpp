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

#ifndef TAPX_INSTANCE_HPP
#define TAPX_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tapx/common.hpp"

namespace tapx {

class RootedTree {
 public:
  RootedTree() = default;
  // Throws ParseError on duplicate edges, bad ids or a disconnected tree.
  RootedTree(int n, NodeId root, std::span<const std::pair<NodeId, NodeId>> edges);

  int node_count() const { return n_; }
  NodeId root() const { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }
  int depth(NodeId v) const { return depth_[v]; }
  bool is_leaf(NodeId v) const { return v != root_ && children_[v].empty(); }
  // True when a is an ancestor of b or a == b.
  bool is_ancestor(NodeId a, NodeId b) const {
    return tin_[a] <= tin_[b] && tout_[b] <= tout_[a];
  }
  NodeId lca(NodeId a, NodeId b) const;
  // Nodes in preorder, root first.
  const std::vector<NodeId>& preorder() const { return preorder_; }
  // Tree edges named by their child endpoint, ascending.
  std::vector<NodeId> edges() const;

 private:
  int n_ = 0;
  NodeId root_ = 0;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<int> depth_, tin_, tout_;
  std::vector<NodeId> preorder_;
};

struct LinkOrigin {
  bool is_input = true;
  int input_index = 0;  // input(k) or shadow_of(k)
};

struct Link {
  LinkId id = 0;
  NodeId u = 0, w = 0;  // u < w
  LinkOrigin origin;
};

class TapInstance {
 public:
  TapInstance() = default;
  // Links are the distinct input pairs, in first-appearance order.
  TapInstance(RootedTree tree, std::vector<std::pair<NodeId, NodeId>> input_links);

  const RootedTree& tree() const { return tree_; }
  int node_count() const { return tree_.node_count(); }
  NodeId root() const { return tree_.root(); }
  const std::vector<Link>& links() const { return links_; }
  int link_count() const { return static_cast<int>(links_.size()); }
  const Link& link(LinkId id) const { return links_[id]; }
  std::optional<LinkId> find_link(NodeId a, NodeId b) const;
  const std::vector<LinkId>& incident(NodeId v) const { return incident_[v]; }
  // Raw input pairs as read, including duplicates.
  const std::vector<std::pair<NodeId, NodeId>>& input_links() const { return input_; }

  // Used by shadow_close only.
  LinkId add_link(NodeId a, NodeId b, LinkOrigin origin);

 private:
  RootedTree tree_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> incident_;
  std::vector<LinkId> pair_;  // n*n, -1 when absent
  std::vector<std::pair<NodeId, NodeId>> input_;
};

TapInstance parse_instance(std::string_view text);
std::string format_instance(const TapInstance& inst);

std::vector<NodeId> tree_path(const RootedTree& tree, NodeId u, NodeId w);
inline std::vector<NodeId> tree_path(const TapInstance& inst, NodeId u, NodeId w) {
  return tree_path(inst.tree(), u, w);
}
// Tree edges (child ids) on the path between u and w.
std::vector<NodeId> path_edges(const RootedTree& tree, NodeId u, NodeId w);
// The tree edge is named by its child endpoint.
bool covers(const TapInstance& inst, LinkId link, NodeId edge_child);

TapInstance shadow_close(const TapInstance& inst);
bool is_shadow_closed(const TapInstance& inst);
bool validate_feasible(const TapInstance& inst);

std::optional<NodeId> first_uncovered_edge(const TapInstance& inst, std::span<const LinkId> cover);
bool verify_cover(const TapInstance& inst, std::span<const LinkId> cover);

// Input-link ids (indices into input_links()) replacing each link by its origin.
std::vector<int> expand_to_input(const TapInstance& inst, std::span<const LinkId> cover);
// Inverse direction: input-link ids to link ids of the same instance.
std::vector<LinkId> input_to_links(const TapInstance& inst, std::span<const int> input_ids);

TapInstance generate_random(int n, double density, std::uint64_t seed, int max_retries = 1000);

std::string format_solution(const TapInstance& inst, std::span<const int> input_ids);
// Resolves `link u w` lines against the instance's links; `size k` is checked if present.
std::vector<LinkId> parse_cover(const TapInstance& inst, std::string_view text);

}  // namespace tapx

#endif  // TAPX_INSTANCE_HPP
