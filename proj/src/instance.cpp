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

#include "tapx/instance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace tapx {

RootedTree::RootedTree(int n, NodeId root, std::span<const std::pair<NodeId, NodeId>> edges)
    : n_(n), root_(root) {
  if (n < 2) throw ParseError("instance needs at least 2 nodes");
  if (root < 0 || root >= n) throw ParseError("root id out of range");
  if (static_cast<int>(edges.size()) != n - 1)
    throw ParseError("expected exactly n-1 tree edges, got " + std::to_string(edges.size()));
  std::vector<std::vector<NodeId>> adj(n);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("edge node id out of range");
    if (a == b) throw ParseError("tree edge is a self-loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw ParseError("duplicate tree edge " + std::to_string(a) + " " + std::to_string(b));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  parent_.assign(n, -1);
  children_.assign(n, {});
  depth_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  std::vector<char> visited(n, 0);
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Iterative DFS giving preorder and entry/exit times.
  std::vector<std::pair<NodeId, size_t>> stack{{root, 0}};
  visited[root] = 1;
  int clock = 0;
  tin_[root] = clock++;
  preorder_.push_back(root);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < adj[v].size()) {
      NodeId c = adj[v][i++];
      if (visited[c]) continue;
      visited[c] = 1;
      parent_[c] = v;
      depth_[c] = depth_[v] + 1;
      children_[v].push_back(c);
      tin_[c] = clock++;
      preorder_.push_back(c);
      stack.push_back({c, 0});
    } else {
      tout_[v] = clock++;
      stack.pop_back();
    }
  }
  if (static_cast<int>(preorder_.size()) != n) throw ParseError("tree is disconnected");
}

NodeId RootedTree::lca(NodeId a, NodeId b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

std::vector<NodeId> RootedTree::edges() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n_; ++v)
    if (v != root_) out.push_back(v);
  return out;
}

TapInstance::TapInstance(RootedTree tree, std::vector<std::pair<NodeId, NodeId>> input_links)
    : tree_(std::move(tree)), input_(std::move(input_links)) {
  int n = tree_.node_count();
  incident_.assign(n, {});
  pair_.assign(static_cast<size_t>(n) * n, -1);
  for (size_t k = 0; k < input_.size(); ++k) {
    auto [a, b] = input_[k];
    if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("link node id out of range");
    if (a == b) throw ParseError("link is a self-loop");
    if (!find_link(a, b)) add_link(a, b, LinkOrigin{true, static_cast<int>(k)});
  }
}

std::optional<LinkId> TapInstance::find_link(NodeId a, NodeId b) const {
  LinkId id = pair_[static_cast<size_t>(a) * node_count() + b];
  if (id < 0) return std::nullopt;
  return id;
}

LinkId TapInstance::add_link(NodeId a, NodeId b, LinkOrigin origin) {
  if (a > b) std::swap(a, b);
  LinkId id = static_cast<LinkId>(links_.size());
  links_.push_back(Link{id, a, b, origin});
  incident_[a].push_back(id);
  incident_[b].push_back(id);
  int n = node_count();
  pair_[static_cast<size_t>(a) * n + b] = id;
  pair_[static_cast<size_t>(b) * n + a] = id;
  return id;
}

TapInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  NodeId root = -1;
  bool header = false;
  std::vector<std::pair<NodeId, NodeId>> edges, links;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto read_int = [&]() {
      long long v;
      if (!(ls >> v)) fail("expected integer after '" + key + "'");
      if (v < 0 || v > 1000000000) fail("integer out of range");
      return static_cast<int>(v);
    };
    if (key == "tap") {
      if (read_int() != 1) fail("unsupported format version");
      header = true;
    } else if (!header) {
      fail("missing 'tap 1' header");
    } else if (key == "nodes") {
      n = read_int();
    } else if (key == "root") {
      root = read_int();
    } else if (key == "edge") {
      int a = read_int(), b = read_int();
      edges.emplace_back(a, b);
    } else if (key == "link") {
      int a = read_int(), b = read_int();
      links.emplace_back(a, b);
    } else {
      fail("unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!header) throw ParseError("missing 'tap 1' header");
  if (n < 0) throw ParseError("missing 'nodes' line");
  if (n < 2) throw ParseError("instance needs at least 2 nodes");
  if (root < 0) throw ParseError("missing 'root' line");
  return TapInstance(RootedTree(n, root, edges), std::move(links));
}

std::string format_instance(const TapInstance& inst) {
  std::ostringstream out;
  const auto& t = inst.tree();
  out << "tap 1\nnodes " << t.node_count() << "\nroot " << t.root() << "\n";
  for (NodeId v : t.edges()) out << "edge " << t.parent(v) << " " << v << "\n";
  for (auto [a, b] : inst.input_links()) out << "link " << a << " " << b << "\n";
  return out.str();
}

std::vector<NodeId> tree_path(const RootedTree& tree, NodeId u, NodeId w) {
  std::vector<NodeId> left, right;
  while (tree.depth(u) > tree.depth(w)) left.push_back(u), u = tree.parent(u);
  while (tree.depth(w) > tree.depth(u)) right.push_back(w), w = tree.parent(w);
  while (u != w) {
    left.push_back(u), u = tree.parent(u);
    right.push_back(w), w = tree.parent(w);
  }
  left.push_back(u);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

std::vector<NodeId> path_edges(const RootedTree& tree, NodeId u, NodeId w) {
  std::vector<NodeId> out;
  while (u != w) {
    if (tree.depth(u) >= tree.depth(w)) {
      out.push_back(u);
      u = tree.parent(u);
    } else {
      out.push_back(w);
      w = tree.parent(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool covers(const TapInstance& inst, LinkId link, NodeId edge_child) {
  const auto& t = inst.tree();
  if (edge_child == t.root()) return false;
  const Link& l = inst.link(link);
  // The edge lies on the path iff exactly one endpoint is below it.
  return t.is_ancestor(edge_child, l.u) != t.is_ancestor(edge_child, l.w);
}

TapInstance shadow_close(const TapInstance& inst) {
  TapInstance out = inst;
  const auto& t = inst.tree();
  // Provenance: lowest input index whose path contains the pair.
  struct Pending {
    NodeId a, b;
    int input;
  };
  std::vector<Pending> pending;
  std::vector<int> best(static_cast<size_t>(t.node_count()) * t.node_count(), -1);
  int n = t.node_count();
  for (const Link& l : inst.links()) {
    int k = l.origin.input_index;
    auto path = tree_path(t, l.u, l.w);
    for (size_t i = 0; i < path.size(); ++i) {
      for (size_t j = i + 1; j < path.size(); ++j) {
        NodeId a = std::min(path[i], path[j]), b = std::max(path[i], path[j]);
        if (inst.find_link(a, b)) continue;
        int& slot = best[static_cast<size_t>(a) * n + b];
        if (slot < 0 || k < slot) slot = k;
      }
    }
  }
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (int k = best[static_cast<size_t>(a) * n + b]; k >= 0) pending.push_back({a, b, k});
  for (const auto& p : pending) out.add_link(p.a, p.b, LinkOrigin{false, p.input});
  return out;
}

bool is_shadow_closed(const TapInstance& inst) {
  for (const Link& l : inst.links()) {
    auto path = tree_path(inst.tree(), l.u, l.w);
    for (size_t i = 0; i < path.size(); ++i)
      for (size_t j = i + 1; j < path.size(); ++j)
        if (!inst.find_link(path[i], path[j])) return false;
  }
  return true;
}

std::optional<NodeId> first_uncovered_edge(const TapInstance& inst, std::span<const LinkId> cover) {
  const auto& t = inst.tree();
  // Difference counting: +1 at both ends, -2 at the lca; subtree sums give edge coverage.
  std::vector<int> cnt(t.node_count(), 0);
  for (LinkId id : cover) {
    const Link& l = inst.link(id);
    cnt[l.u] += 1;
    cnt[l.w] += 1;
    cnt[t.lca(l.u, l.w)] -= 2;
  }
  const auto& pre = t.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it)
    if (*it != t.root()) cnt[t.parent(*it)] += cnt[*it];
  for (NodeId v : t.edges())
    if (cnt[v] <= 0) return v;
  return std::nullopt;
}

bool verify_cover(const TapInstance& inst, std::span<const LinkId> cover) {
  return !first_uncovered_edge(inst, cover).has_value();
}

bool validate_feasible(const TapInstance& inst) {
  std::vector<LinkId> all(inst.link_count());
  for (LinkId i = 0; i < inst.link_count(); ++i) all[i] = i;
  return verify_cover(inst, all);
}

std::vector<int> expand_to_input(const TapInstance& inst, std::span<const LinkId> cover) {
  std::vector<int> out;
  for (LinkId id : cover) out.push_back(inst.link(id).origin.input_index);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LinkId> input_to_links(const TapInstance& inst, std::span<const int> input_ids) {
  std::vector<LinkId> out;
  for (int k : input_ids) {
    if (k < 0 || k >= static_cast<int>(inst.input_links().size())) throw Error("input link id out of range");
    auto [a, b] = inst.input_links()[k];
    out.push_back(*inst.find_link(a, b));
  }
  return out;
}

TapInstance generate_random(int n, double density, std::uint64_t seed, int max_retries) {
  if (n < 2) throw Error("generate_random needs n >= 2");
  if (!(density >= 0.0 && density <= 1.0)) throw Error("density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  // Plain modulo / 53-bit fraction keeps the stream identical across standard libraries.
  auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> parent(n, -1);
    for (NodeId v = 1; v < n; ++v) {
      parent[v] = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(v));
      edges.emplace_back(parent[v], v);
    }
    // Pairs parallel to a tree edge are drawn too; n = 2 is otherwise never feasible.
    std::vector<std::pair<NodeId, NodeId>> links;
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = a + 1; b < n; ++b)
        if (unit() < density) links.emplace_back(a, b);
    TapInstance inst(RootedTree(n, 0, edges), std::move(links));
    if (validate_feasible(inst)) return inst;
  }
  throw InfeasibleError("no feasible instance within the retry budget; density too low");
}

std::string format_solution(const TapInstance& inst, std::span<const int> input_ids) {
  std::ostringstream out;
  for (int k : input_ids) {
    auto [a, b] = inst.input_links()[k];
    out << "link " << a << " " << b << "\n";
  }
  out << "size " << input_ids.size() << "\n";
  return out.str();
}

std::vector<LinkId> parse_cover(const TapInstance& inst, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<LinkId> out;
  long long declared = -1;
  size_t lines = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "size") {
      if (!(ls >> declared)) throw ParseError("bad size line");
    } else if (key == "link") {
      long long a, b;
      if (!(ls >> a >> b)) throw ParseError("bad link line");
      if (a < 0 || b < 0 || a >= inst.node_count() || b >= inst.node_count())
        throw ParseError("cover link node id out of range");
      auto id = inst.find_link(static_cast<NodeId>(a), static_cast<NodeId>(b));
      if (!id) throw ParseError("cover uses a pair that is not a link: " + std::to_string(a) +
                                " " + std::to_string(b));
      out.push_back(*id);
      ++lines;
    } else {
      throw ParseError("unknown keyword in cover: '" + key + "'");
    }
  }
  if (declared >= 0 && static_cast<size_t>(declared) != lines)
    throw ParseError("size trailer does not match the number of link lines");
  return out;
}

}  // namespace tapx
