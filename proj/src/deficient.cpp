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

#include "tapx/deficient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tapx/semiclosed.hpp"

namespace tapx {

namespace {

std::vector<int> leaves_under(const TreeView& view, int v) {
  std::vector<int> out;
  for (int x : view.subtree(v))
    if (view.is_leaf(x)) out.push_back(x);
  return out;
}

std::vector<LinkId> matching_inside(const TreeView& view, std::span<const LinkId> matching, int v) {
  std::vector<LinkId> out;
  for (LinkId id : matching) {
    if (view.is_internal(id)) continue;
    auto [a, b] = view.image(id);
    if (view.in_subtree(v, a) && view.in_subtree(v, b)) out.push_back(id);
  }
  return out;
}

bool has_exit(const TreeView& view, int x, int v) {
  for (LinkId id : view.incident(x)) {
    auto [a, b] = view.image(id);
    if (!view.in_subtree(v, a == x ? b : a)) return true;
  }
  return false;
}

template <typename Cert, typename Detect>
std::vector<Cert> outermost(const TreeView& view, Detect detect) {
  std::map<int, Cert> found;
  for (int v = 0; v < view.size(); ++v)
    if (auto c = detect(v)) found.emplace(v, *c);
  std::vector<Cert> out;
  for (auto& [v, c] : found) {
    bool outer = true;
    for (int a = view.parent(v); a >= 0 && outer; a = view.parent(a)) outer = !found.count(a);
    if (outer) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [&](const Cert& x, const Cert& y) { return view.rep(x.v) < view.rep(y.v); });
  return out;
}

std::string rep_list(const TreeView& view, std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(view.rep(x));
  return s;
}

}  // namespace

std::optional<Deficient3> detect_deficient3(const TreeView& view, std::span<const LinkId> matching,
                                            int v) {
  if (v == view.root()) return std::nullopt;
  auto leaves = leaves_under(view, v);
  if (leaves.size() != 3) return std::nullopt;
  if (!is_semiclosed(view, matching, v)) return std::nullopt;
  auto inside = matching_inside(view, matching, v);
  if (inside.size() != 1) return std::nullopt;
  auto [p, q] = view.image(inside[0]);
  if (!view.is_leaf(p) || !view.is_leaf(q)) return std::nullopt;
  Deficient3 d;
  d.v = v;
  d.matched = inside[0];
  for (int x : leaves)
    if (x != p && x != q) d.a = x;

  std::vector<int> deg4, deg3;
  for (int x : view.subtree(v)) {
    if (view.children(x).size() == 3) deg4.push_back(x);
    if (view.children(x).size() == 2) deg3.push_back(x);
  }
  auto valid = [&](int b1, int b2) {
    return view.link_between(d.a, b1).has_value() && has_exit(view, b2, v);
  };
  if (deg4.size() == 1 && deg3.empty()) {
    d.upper = deg4[0];
    bool first = valid(p, q), second = valid(q, p);
    if (!first && !second) return std::nullopt;
    int b1 = p, b2 = q;
    if (first && second) {
      int up_p = up_current(view, p), up_q = up_current(view, q);
      // Ceiling: the leaf whose up-node is higher; ties by representative.
      bool p_higher = up_p != up_q ? view.is_ancestor(up_p, up_q) : view.rep(p) < view.rep(q);
      if (p_higher) b1 = q, b2 = p;
    } else if (second) {
      b1 = q, b2 = p;
    }
    d.b1 = b1;
    d.b2 = b2;
  } else if (deg3.size() == 2 && deg4.empty()) {
    int hi = deg3[0], lo = deg3[1];
    if (view.depth(hi) > view.depth(lo)) std::swap(hi, lo);
    if (!view.is_ancestor(hi, lo)) return std::nullopt;
    d.upper = hi;
    d.lower = lo;
    if (!view.in_subtree(lo, d.a)) return std::nullopt;
    for (int x : leaves) {
      if (x == d.a) continue;
      (view.in_subtree(lo, x) ? d.b2 : d.b1) = x;
    }
    if (!valid(d.b1, d.b2)) return std::nullopt;
  } else {
    return std::nullopt;
  }
  d.swap_in = *view.link_between(d.a, d.b1);
  return d;
}

std::optional<Deficient4> detect_deficient4(const TreeView& view, const Anatomy& anatomy,
                                            std::span<const LinkId> matching, int v) {
  if (v == view.root()) return std::nullopt;
  auto leaves = leaves_under(view, v);
  if (leaves.size() != 4) return std::nullopt;
  std::vector<int> stems;
  for (NodeId s : anatomy.stems) {
    int x = view.node_of(s);
    if (view.is_original(x) && view.in_subtree(v, x)) stems.push_back(x);
  }
  if (stems.size() != 1) return std::nullopt;
  if (!is_semiclosed(view, matching, v)) return std::nullopt;
  Deficient4 d;
  d.v = v;
  d.stem = stems[0];
  for (int x : view.subtree(d.stem))
    if (!view.is_original(x)) return std::nullopt;
  auto inside = matching_inside(view, matching, v);
  if (inside.size() != 1) return std::nullopt;
  d.matched = inside[0];
  auto [p, q] = view.image(inside[0]);
  bool ps = view.in_subtree(d.stem, p), qs = view.in_subtree(d.stem, q);
  if (ps == qs) return std::nullopt;
  d.b1 = ps ? p : q;
  d.b2 = ps ? q : p;
  auto stem_leaves = leaves_under(view, d.stem);
  if (stem_leaves.size() != 2) return std::nullopt;
  d.a = stem_leaves[0] == d.b1 ? stem_leaves[1] : stem_leaves[0];
  for (int x : leaves)
    if (x != d.a && x != d.b1 && x != d.b2) d.c = x;
  d.p = view.lca(d.stem, d.c);
  if (!view.in_subtree(d.p, d.b2)) return std::nullopt;
  auto latch = view.link_between(d.c, d.stem);
  if (!latch) return std::nullopt;
  d.latch = *latch;
  if (!has_exit(view, d.b2, v)) return std::nullopt;
  return d;
}

std::vector<Deficient3> maximal_deficient3(const TreeView& view, std::span<const LinkId> matching) {
  return outermost<Deficient3>(view, [&](int v) { return detect_deficient3(view, matching, v); });
}

std::vector<Deficient4> maximal_deficient4(const TreeView& view, const Anatomy& anatomy,
                                           std::span<const LinkId> matching) {
  return outermost<Deficient4>(
      view, [&](int v) { return detect_deficient4(view, anatomy, matching, v); });
}

SubtreeChoice algorithm2(SolverState& state) {
  const TreeView& cur = state.tree.view();
  const TapInstance& inst = state.inst;
  const auto& m = state.matching.links;
  bool check = state.options.check;

  // Auxiliary tree: each latch path merged into a latched node.
  auto d4 = maximal_deficient4(cur, state.anatomy, m);
  std::vector<int> owner = cur.owner();
  std::vector<int> latched_labels;
  std::vector<LinkId> latches;
  for (const auto& d : d4) {
    std::vector<NodeId> members;
    for (int x : cur.path(d.c, d.stem))
      members.insert(members.end(), cur.members(x).begin(), cur.members(x).end());
    NodeId label = *std::min_element(members.begin(), members.end());
    for (NodeId y : members) owner[y] = label;
    latched_labels.push_back(label);
    latches.push_back(d.latch);
    ++state.stats.latches;
    TraceRecord rec;
    rec.kind = "latch";
    rec.links = {d.latch};
    rec.node = cur.rep(d.v);
    rec.detail = "stem,a,b1,b2,c = " + rep_list(cur, {d.stem, d.a, d.b1, d.b2, d.c});
    state.record(std::move(rec));
  }
  TreeView aux(inst, owner, latched_labels);

  std::vector<LinkId> mnew(m.begin(), m.end());
  auto d3 = maximal_deficient3(aux, m);
  for (const auto& d : d3) {
    auto it = std::find(mnew.begin(), mnew.end(), d.matched);
    ensure(it != mnew.end(), "ceiling swap of a link outside the matching");
    *it = d.swap_in;
    ++state.stats.swaps;
    TraceRecord rec;
    rec.kind = "mnew-swap";
    rec.removed = {d.matched};
    rec.links = {d.swap_in};
    rec.node = aux.rep(d.v);
    rec.detail = "a,b1,b2 = " + rep_list(aux, {d.a, d.b1, d.b2});
    state.record(std::move(rec));
  }
  std::sort(mnew.begin(), mnew.end());

  if (check) {
    std::set<int> ends;
    for (LinkId id : mnew) {
      if (aux.is_internal(id)) continue;
      auto [a, b] = aux.image(id);
      ensure(ends.insert(a).second && ends.insert(b).second, "swapped matching is not a matching");
    }
    auto exposed = exposed_mask(aux, mnew);
    for (const auto& d : d3) ensure(exposed[d.b2], "ceiling leaf still matched after the swap");
    for (int x = 0; x < aux.size(); ++x)
      if (aux.is_latched(x)) ensure(!aux.is_leaf(x), "latched node is a leaf");
  }

  int vt = minimally_semiclosed(aux, mnew);
  ensure(!aux.is_latched(vt), "chosen subtree is rooted at a latched node");
  SubtreeChoice out;
  out.v = cur.node_of(aux.rep(vt));
  ensure(cur.members(out.v) == aux.members(vt), "chosen root differs between the two trees");
  auto g = gamma(aux, mnew, vt);
  if (check) ensure(is_fitting_cover(aux, vt, g), "basic link set is not a fitting cover");
  size_t gamma_size = g.size();
  out.cover = g;
  for (LinkId l : latches) {
    if (!aux.in_subtree(vt, aux.node_of(inst.link(l).u))) continue;
    out.latches.push_back(l);
    out.cover.push_back(l);
  }
  std::sort(out.cover.begin(), out.cover.end());
  out.cover.erase(std::unique(out.cover.begin(), out.cover.end()), out.cover.end());
  out.matching_used = mnew;

  if (check) {
    ensure(out.cover.size() == gamma_size + out.latches.size(), "latch coincides with a basic link");
    ensure(is_semiclosed(cur, m, out.v), "chosen subtree is not semiclosed in the current tree");
    auto g_old = gamma(cur, m, out.v);
    ensure(out.cover.size() == g_old.size(), "cover size differs from the plain basic link set");
    ensure(is_fitting_cover(cur, out.v, out.cover), "chosen cover is not fitting");
    // Plain minimal subtree with the fixed matching: its basic set must fit too.
    int v0 = minimally_semiclosed(cur, m);
    ensure(is_fitting_cover(cur, v0, gamma(cur, m, v0)), "basic link set is not a fitting cover");
  }

  TraceRecord rec;
  rec.kind = "alg2-pick";
  rec.links = out.cover;
  rec.node = cur.rep(out.v);
  rec.cost = static_cast<int>(out.cover.size()) + 1;
  rec.detail = "basic " + std::to_string(gamma_size) + " + latches " +
               std::to_string(out.latches.size());
  state.record(std::move(rec));
  return out;
}

}  // namespace tapx
