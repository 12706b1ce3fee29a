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

#include "tapx/anatomy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tapx {

namespace {

bool on_path(const RootedTree& t, NodeId x, NodeId c, NodeId d) {
  NodeId top = t.lca(c, d);
  return t.is_ancestor(top, x) && (t.is_ancestor(x, c) || t.is_ancestor(x, d));
}

std::vector<NodeId> leaves_below(const RootedTree& t, NodeId v) {
  std::vector<NodeId> out, stack{v};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    if (t.is_leaf(x)) out.push_back(x);
    for (NodeId c : t.children(x)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_overlapping_pair(const TapInstance& inst, LinkId l1, LinkId l2) {
  const auto& t = inst.tree();
  const Link& a = inst.link(l1);
  const Link& b = inst.link(l2);
  auto ea = path_edges(t, a.u, a.w);
  auto eb = path_edges(t, b.u, b.w);
  std::vector<NodeId> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
  if (common.empty()) return false;
  return on_path(t, a.u, b.u, b.w) || on_path(t, a.w, b.u, b.w) || on_path(t, b.u, a.u, a.w) ||
         on_path(t, b.w, a.u, a.w);
}

std::vector<LinkId> maximal_links(const TapInstance& inst) {
  const auto& t = inst.tree();
  std::vector<LinkId> out;
  // Under shadow closure a strictly longer path exists iff some one-node
  // extension at either end is itself a link.
  for (const Link& l : inst.links()) {
    bool maximal = true;
    for (int side = 0; side < 2 && maximal; ++side) {
      NodeId a = side == 0 ? l.u : l.w;
      NodeId b = side == 0 ? l.w : l.u;
      auto ext = [&](NodeId x) {
        if (x < 0 || on_path(t, x, a, b)) return;
        if (inst.find_link(x, b)) maximal = false;
      };
      ext(t.parent(a));
      for (NodeId c : t.children(a)) ext(c);
    }
    if (maximal) out.push_back(l.id);
  }
  return out;
}

Anatomy compute_anatomy(const TapInstance& inst) {
  const auto& t = inst.tree();
  int n = t.node_count();
  Anatomy an;
  an.is_leaf.assign(n, 0);
  an.is_stem.assign(n, 0);
  an.stem_of.assign(n, -1);
  an.up.assign(n, -1);
  an.kind.assign(inst.link_count(), LinkKind::kRegular);

  std::vector<int> leaf_count(n, 0);
  const auto& pre = t.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    NodeId v = *it;
    if (t.is_leaf(v)) {
      leaf_count[v] = 1;
      an.is_leaf[v] = 1;
    }
    if (v != t.root()) leaf_count[t.parent(v)] += leaf_count[v];
  }
  for (NodeId v = 0; v < n; ++v)
    if (an.is_leaf[v]) an.leaves.push_back(v);

  for (NodeId v : an.leaves) {
    for (LinkId id : inst.incident(v)) {
      const Link& l = inst.link(id);
      NodeId x = l.u == v ? l.w : l.u;
      if (t.is_ancestor(x, v) && (an.up[v] < 0 || t.depth(x) < t.depth(an.up[v]))) an.up[v] = x;
    }
  }

  for (NodeId s = 0; s < n; ++s) {
    if (s == t.root() || t.children(s).size() != 2 || leaf_count[s] != 2) continue;
    auto lv = leaves_below(t, s);
    auto tw = inst.find_link(lv[0], lv[1]);
    if (!tw) continue;
    an.stems.push_back(s);
    an.is_stem[s] = 1;
    an.twin[s] = *tw;
    an.kind[*tw] = LinkKind::kTwin;
    an.stem_of[lv[0]] = s;
    an.stem_of[lv[1]] = s;
  }

  for (NodeId s : an.stems) {
    auto lv = leaves_below(t, s);
    for (int i = 0; i < 2; ++i) {
      NodeId b0 = lv[i], b1 = lv[1 - i];
      NodeId u0 = an.up[b0];
      if (u0 < 0 || !t.is_ancestor(u0, s)) continue;
      // Lowest ancestor of up(b0) with at least three leaves below.
      NodeId v = u0;
      while (leaf_count[v] < 3 && v != t.root()) v = t.parent(v);
      if (leaf_count[v] != 3) continue;
      NodeId b2 = -1;
      for (NodeId x : leaves_below(t, v))
        if (x != b0 && x != b1) b2 = x;
      auto bl = inst.find_link(b1, b2);
      if (!bl) continue;
      an.buds.push_back(b0);
      an.buddy[b0] = *bl;
      an.bud_third[b0] = b2;
      an.kind[*bl] = LinkKind::kBuddy;
      NodeId q = t.lca(s, b2);
      auto sq = tree_path(t, s, q);
      std::set<NodeId> drop(sq.begin(), sq.end());
      drop.insert(b0);
      std::vector<NodeId> special;
      for (NodeId x : tree_path(t, b0, u0))
        if (!drop.count(x)) special.push_back(x);
      std::sort(special.begin(), special.end());
      an.r_special[b0] = special;
    }
  }
  std::sort(an.buds.begin(), an.buds.end());

  std::set<NodeId> special_all;
  for (auto& [b, nodes] : an.r_special) special_all.insert(nodes.begin(), nodes.end());
  for (NodeId v = 0; v < n; ++v)
    if (!an.is_leaf[v] && !an.is_stem[v] && !special_all.count(v)) an.r_nonspecial.push_back(v);

  for (const Link& l : inst.links())
    if (an.kind[l.id] == LinkKind::kRegular) an.e_reg.push_back(l.id);
  an.maximal_links = maximal_links(inst);
  return an;
}

void check_anatomy(const TapInstance& inst, const Anatomy& an) {
  const auto& t = inst.tree();
  std::set<LinkId> twins, buddies;
  for (auto [s, id] : an.twin) {
    auto lv = leaves_below(t, s);
    const Link& l = inst.link(id);
    ensure(lv.size() == 2 && l.u == lv[0] && l.w == lv[1], "twin link does not join the stem's leaves");
    ensure(twins.insert(id).second, "twin link shared by two stems");
  }
  for (auto [b, id] : an.buddy) ensure(buddies.insert(id).second, "buddy link shared by two buds");
  for (LinkId id : twins) ensure(!buddies.count(id), "link is both twin and buddy");
  ensure(twins.size() + buddies.size() + an.e_reg.size() == static_cast<size_t>(inst.link_count()),
         "regular/twin/buddy links do not partition the link set");
  for (NodeId v : an.leaves) ensure(an.up[v] >= 0 && t.is_ancestor(an.up[v], v) && an.up[v] != v,
                                    "up(v) is not a proper ancestor of leaf v");
  for (auto& [b, nodes] : an.r_special) {
    for (NodeId x : nodes) {
      ensure(t.children(x).size() == 1, "special node without a unique child");
      ensure(t.is_ancestor(x, b), "special node not an ancestor of its bud");
      ensure(!an.is_stem[x] && !an.is_leaf[x], "special node is a stem or leaf");
    }
  }
  for (auto& [b, nb] : an.r_special)
    for (auto& [c, nc] : an.r_special) {
      if (b >= c || an.stem_of[b] == an.stem_of[c]) continue;
      std::vector<NodeId> common;
      std::set_intersection(nb.begin(), nb.end(), nc.begin(), nc.end(), std::back_inserter(common));
      ensure(common.empty(), "special sets of unrelated buds intersect");
    }
}

std::string format_anatomy(const TapInstance& inst, const Anatomy& an) {
  const auto& t = inst.tree();
  std::ostringstream out;
  std::set<NodeId> special_all;
  for (auto& [b, nodes] : an.r_special) special_all.insert(nodes.begin(), nodes.end());
  for (NodeId v = 0; v < t.node_count(); ++v) {
    out << "node " << v;
    if (v == t.root()) out << " root";
    if (an.is_leaf[v]) {
      out << " leaf up " << an.up[v];
      if (an.stem_of[v] >= 0) out << " stem " << an.stem_of[v];
      if (an.buddy.count(v)) {
        const Link& l = inst.link(an.buddy.at(v));
        out << " bud buddy " << l.u << " " << l.w;
      }
    } else if (an.is_stem[v]) {
      const Link& l = inst.link(an.twin.at(v));
      out << " stem twin " << l.u << " " << l.w;
    } else {
      out << (special_all.count(v) ? " special" : " nonspecial");
    }
    out << "\n";
  }
  std::set<LinkId> maximal(an.maximal_links.begin(), an.maximal_links.end());
  for (const Link& l : inst.links()) {
    out << "link " << l.u << " " << l.w;
    switch (an.kind[l.id]) {
      case LinkKind::kTwin: out << " twin"; break;
      case LinkKind::kBuddy: out << " buddy"; break;
      default: out << " regular"; break;
    }
    if (maximal.count(l.id)) out << " maximal";
    out << (l.origin.is_input ? " input " : " shadow ") << l.origin.input_index << "\n";
  }
  return out.str();
}

}  // namespace tapx
