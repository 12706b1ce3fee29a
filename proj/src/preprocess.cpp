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

#include "tapx/preprocess.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <set>

#include "tapx/credits.hpp"
#include "tapx/semiclosed.hpp"

namespace tapx {

namespace {

using Bits = boost::dynamic_bitset<>;

struct SubtreeEdges {
  NodeId v;
  std::map<NodeId, size_t> index;  // child endpoint -> bit

  SubtreeEdges(const RootedTree& t, NodeId root) : v(root) {
    for (NodeId x : t.preorder())
      if (x != root && t.is_ancestor(root, x)) index.emplace(x, index.size());
  }
  Bits full() const { return Bits(index.size()).set(); }
  Bits clip(const RootedTree& t, NodeId a, NodeId b) const {
    Bits out(index.size());
    for (NodeId x : path_edges(t, a, b))
      if (auto it = index.find(x); it != index.end()) out.set(it->second);
    return out;
  }
};

// Distinct edge sets, dropping those strictly inside another; the first link
// producing each set is kept.
std::vector<std::pair<Bits, LinkId>> maximal_sets(std::vector<std::pair<Bits, LinkId>> sets) {
  std::vector<std::pair<Bits, LinkId>> uniq;
  for (auto& s : sets) {
    if (s.first.none()) continue;
    bool dup = false;
    for (auto& u : uniq) dup = dup || u.first == s.first;
    if (!dup) uniq.push_back(std::move(s));
  }
  std::vector<std::pair<Bits, LinkId>> out;
  for (size_t i = 0; i < uniq.size(); ++i) {
    bool inside = false;
    for (size_t j = 0; j < uniq.size() && !inside; ++j)
      inside = i != j && uniq[i].first.is_proper_subset_of(uniq[j].first);
    if (!inside) out.push_back(uniq[i]);
  }
  return out;
}

std::vector<NodeId> leaves_in(const TapInstance& inst, const Anatomy& an, NodeId v) {
  std::vector<NodeId> out;
  for (NodeId x : an.leaves)
    if (inst.tree().is_ancestor(v, x)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<LinkId> find_fitting_cover_3(const TapInstance& inst, NodeId v,
                                         std::span<const LinkId> cover) {
  const auto& t = inst.tree();
  std::vector<LinkId> out;
  for (LinkId id : cover) {
    const Link& l = inst.link(id);
    bool iu = t.is_ancestor(v, l.u), iw = t.is_ancestor(v, l.w);
    NodeId a = l.u, b = l.w;
    if (iu && !iw) b = v;
    else if (!iu && iw) a = v;
    else if (!iu && !iw) continue;
    if (a == b) continue;
    auto clipped = inst.find_link(a, b);
    ensure(clipped.has_value(), "clipped shadow missing; instance is not shadow-closed");
    out.push_back(*clipped);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<BadTwoStem> is_bad_2stem(const TapInstance& inst, const Anatomy& an,
                                       const Matching& matching, NodeId v) {
  const auto& t = inst.tree();
  auto leaves = leaves_in(inst, an, v);
  if (leaves.size() != 4) return std::nullopt;
  std::vector<NodeId> stems;
  for (NodeId s : an.stems)
    if (t.is_ancestor(v, s)) stems.push_back(s);
  if (stems.size() != 2) return std::nullopt;
  TreeView view = TreeView::identity(inst);
  if (!is_semiclosed(view, matching.links, v)) return std::nullopt;

  BadTwoStem cert;
  cert.v = v;
  cert.s1 = stems[0];
  cert.s2 = stems[1];
  auto side = [&](NodeId x) { return t.is_ancestor(cert.s1, x) ? 1 : 2; };
  std::vector<LinkId> cross;
  for (const Link& l : inst.links())
    if (an.is_leaf[l.u] && an.is_leaf[l.w] && t.is_ancestor(v, l.u) && t.is_ancestor(v, l.w) &&
        side(l.u) != side(l.w))
      cross.push_back(l.id);

  // (i) a cross link is matched; (ii) exactly two leaves exposed.
  LinkId mlink = -1;
  for (LinkId id : cross)
    if (std::binary_search(matching.links.begin(), matching.links.end(), id)) mlink = id;
  if (mlink < 0) return std::nullopt;
  int exposed = 0;
  for (NodeId x : leaves) exposed += matching.mate[x] < 0;
  if (exposed != 2) return std::nullopt;
  const Link& ml = inst.link(mlink);
  cert.w1 = side(ml.u) == 1 ? ml.u : ml.w;
  cert.w2 = side(ml.u) == 1 ? ml.w : ml.u;
  for (NodeId x : leaves) {
    if (x == cert.w1 || x == cert.w2) continue;
    (side(x) == 1 ? cert.u1 : cert.u2) = x;
  }
  if (matching.mate[cert.u1] >= 0 || matching.mate[cert.u2] >= 0) return std::nullopt;

  // (iii) some leaf meets every cross link.
  bool hub = false;
  for (NodeId x : leaves) {
    bool all = true;
    for (LinkId id : cross) all = all && (inst.link(id).u == x || inst.link(id).w == x);
    hub = hub || all;
  }
  if (!hub) return std::nullopt;

  SubtreeEdges edges(t, v);
  Bits full = edges.full();

  // (iv) a cover with three links. Links without an end inside never enter.
  std::vector<std::pair<Bits, LinkId>> any_sets;
  for (const Link& l : inst.links())
    if (t.is_ancestor(v, l.u) || t.is_ancestor(v, l.w))
      any_sets.emplace_back(edges.clip(t, l.u, l.w), l.id);
  auto cand = maximal_sets(std::move(any_sets));
  bool found = false;
  for (size_t i = 0; i < cand.size() && !found; ++i)
    for (size_t j = i; j < cand.size() && !found; ++j)
      for (size_t k = j; k < cand.size() && !found; ++k)
        if ((cand[i].first | cand[j].first | cand[k].first) == full) {
          found = true;
          cert.cover = {cand[i].second, cand[j].second, cand[k].second};
        }
  if (!found) return std::nullopt;
  std::sort(cert.cover.begin(), cert.cover.end());
  cert.cover.erase(std::unique(cert.cover.begin(), cert.cover.end()), cert.cover.end());

  // (v) no leafy 3-cover: one link from inside to a leaf outside, two internal.
  std::vector<std::pair<Bits, LinkId>> leafy, internal;
  for (const Link& l : inst.links()) {
    bool iu = t.is_ancestor(v, l.u), iw = t.is_ancestor(v, l.w);
    if (iu && iw) {
      internal.emplace_back(edges.clip(t, l.u, l.w), l.id);
    } else if (iu != iw) {
      NodeId out = iu ? l.w : l.u;
      if (an.is_leaf[out]) leafy.emplace_back(edges.clip(t, l.u, l.w), l.id);
    }
  }
  auto lc = maximal_sets(std::move(leafy));
  auto ic = maximal_sets(std::move(internal));
  for (auto& a : lc)
    for (size_t j = 0; j < ic.size(); ++j)
      for (size_t k = j; k < ic.size(); ++k)
        if ((a.first | ic[j].first | ic[k].first) == full) return std::nullopt;

  cert.fitting = find_fitting_cover_3(inst, v, cert.cover);
  return cert;
}

std::vector<BadTwoStem> maximal_bad_2stem_trees(const TapInstance& inst, const Anatomy& an,
                                                const Matching& matching) {
  const auto& t = inst.tree();
  std::map<NodeId, BadTwoStem> found;
  for (NodeId v = 0; v < inst.node_count(); ++v)
    if (auto c = is_bad_2stem(inst, an, matching, v)) found.emplace(v, std::move(*c));
  std::vector<BadTwoStem> out;
  for (auto& [v, c] : found) {
    bool outer = true;
    for (NodeId a = v; a != t.root() && outer;) {
      a = t.parent(a);
      outer = !found.count(a);
    }
    if (outer) out.push_back(c);
  }
  return out;
}

void preprocessing_step1(SolverState& state) {
  const auto& t = state.inst.tree();
  for (const auto& cert : maximal_bad_2stem_trees(state.inst, state.anatomy, state.matching)) {
    if (state.options.check) {
      TreeView view = TreeView::identity(state.inst);
      ensure(cert.fitting.size() <= 3, "bad 2-stem cover has more than 3 links");
      ensure(is_fitting_cover(view, view.node_of(cert.v), cert.fitting),
             "bad 2-stem cover is not fitting");
    }
    state.pick(cert.fitting);
    int x = state.contract(cert.fitting, "prep1");
    size_t size = 0;
    for (NodeId y = 0; y < state.inst.node_count(); ++y) size += t.is_ancestor(cert.v, y);
    ensure(state.tree.view().members(x).size() == size, "bad 2-stem contraction is not the subtree");
    ++state.stats.prep1;
    TraceRecord rec;
    rec.kind = "prep1";
    rec.links = cert.fitting;
    rec.hit = state.tree.history().back().hit;
    rec.node = cert.v;
    rec.cost = static_cast<int>(cert.fitting.size()) + 1;
    rec.detail = "stems " + std::to_string(cert.s1) + "," + std::to_string(cert.s2) +
                 " matched " + std::to_string(cert.w1) + "-" + std::to_string(cert.w2);
    state.record(std::move(rec));
  }
}

void preprocessing_step2(SolverState& state) {
  const auto& an = state.anatomy;
  const auto& t = state.inst.tree();
  const auto& m = state.matching;
  std::set<std::vector<NodeId>> done;
  for (NodeId b0 : an.buds) {
    NodeId b1 = -1, b2 = an.bud_third.at(b0);
    const Link& bl = state.inst.link(an.buddy.at(b0));
    b1 = bl.u == b2 ? bl.w : bl.u;
    if (m.mate[b0] >= 0 || m.mate[b1] >= 0 || m.mate[b2] >= 0) continue;
    std::vector<NodeId> key{b0, b1, b2};
    std::sort(key.begin(), key.end());
    if (done.count(key)) continue;
    // Orient so that up(b0) is the higher one when the co-leaf is also a bud.
    if (an.buddy.count(b1) && an.bud_third.at(b1) == b2) {
      NodeId ua = an.up[b0], ub = an.up[b1];
      bool swap = (ua != ub && t.is_ancestor(ub, ua)) || (ua == ub && b1 < b0);
      if (swap) std::swap(b0, b1);
    }
    const TreeView& view = state.tree.view();
    if (!view.is_original(view.node_of(b0)) || !view.is_original(view.node_of(b1)) ||
        !view.is_original(view.node_of(b2)))
      continue;
    done.insert(key);
    auto up_link = state.inst.find_link(an.up[b0], b0);
    auto buddy = state.inst.find_link(b1, b2);
    ensure(up_link && buddy, "bud links missing");
    std::vector<LinkId> links{*up_link, *buddy};
    auto credit = integral_credit(view, m.links, links);
    if (state.options.check)
      ensure(credit.half_units >= 2 * 3, "exposed bud triple lacks credit for two links");
    state.pick(links);
    state.contract(links, "prep2");
    ++state.stats.prep2;
    TraceRecord rec;
    rec.kind = "prep2";
    rec.links = links;
    rec.hit = state.tree.history().back().hit;
    rec.node = b0;
    rec.credit_half = credit.half_units;
    rec.cost = 3;
    rec.detail = credit.describe();
    state.record(std::move(rec));
  }
}

}  // namespace tapx
