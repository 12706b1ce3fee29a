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

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tapx/matching.hpp"
#include "tapx/preprocess.hpp"
#include "tapx/semiclosed.hpp"

using namespace tapx;
using namespace tapx::testing;

namespace {

bool in(const RootedTree& t, NodeId v, NodeId x) { return t.is_ancestor(v, x); }

bool covers_subtree(const TapInstance& inst, NodeId v, const std::vector<LinkId>& links) {
  const auto& t = inst.tree();
  for (NodeId e : t.edges()) {
    if (e == v || !in(t, v, e)) continue;
    bool hit = false;
    for (LinkId id : links) hit = hit || covers(inst, id, e);
    if (!hit) return false;
  }
  return true;
}

// Conditions read straight off the definition, with plain loops.
bool bad_by_definition(const TapInstance& inst, const Anatomy& an, const Matching& m, NodeId v) {
  const auto& t = inst.tree();
  std::vector<NodeId> leaves, stems;
  for (NodeId x : an.leaves)
    if (in(t, v, x)) leaves.push_back(x);
  for (NodeId s : an.stems)
    if (in(t, v, s)) stems.push_back(s);
  if (leaves.size() != 4 || stems.size() != 2) return false;
  for (LinkId id : m.links)
    if (in(t, v, inst.link(id).u) != in(t, v, inst.link(id).w)) return false;
  int exposed = 0;
  for (NodeId x : leaves) {
    if (m.mate[x] >= 0) continue;
    ++exposed;
    for (LinkId id : inst.incident(x))
      if (!in(t, v, inst.link(id).u) || !in(t, v, inst.link(id).w)) return false;
  }
  std::vector<LinkId> cross;
  bool matched_cross = false;
  for (const Link& l : inst.links()) {
    if (!an.is_leaf[l.u] || !an.is_leaf[l.w] || !in(t, v, l.u) || !in(t, v, l.w)) continue;
    if (in(t, stems[0], l.u) == in(t, stems[0], l.w)) continue;
    cross.push_back(l.id);
    matched_cross = matched_cross || std::count(m.links.begin(), m.links.end(), l.id);
  }
  if (!matched_cross || exposed != 2) return false;
  bool hub = false;
  for (NodeId x : leaves) {
    bool all = true;
    for (LinkId id : cross) all = all && (inst.link(id).u == x || inst.link(id).w == x);
    hub = hub || all;
  }
  if (!hub) return false;
  int mlinks = inst.link_count();
  bool three = false;
  for (int a = 0; a < mlinks && !three; ++a)
    for (int b = a; b < mlinks && !three; ++b)
      for (int c = b; c < mlinks && !three; ++c) three = covers_subtree(inst, v, {a, b, c});
  if (!three) return false;
  auto inside = [&](LinkId id) { return in(t, v, inst.link(id).u) && in(t, v, inst.link(id).w); };
  for (int a = 0; a < mlinks; ++a) {
    const Link& l = inst.link(a);
    bool iu = in(t, v, l.u), iw = in(t, v, l.w);
    if (iu == iw || !an.is_leaf[iu ? l.w : l.u]) continue;
    for (int b = 0; b < mlinks; ++b)
      for (int c = b; c < mlinks; ++c)
        if (inside(b) && inside(c) && covers_subtree(inst, v, {a, b, c})) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("clipping a cover to a subtree") {
  // Path 0-1-2-3 with leaf 3; subtree at 1.
  auto inst = closed(4, 0, {{0, 1}, {1, 2}, {2, 3}}, {{0, 3}});
  CHECK(find_fitting_cover_3(inst, 1, ids(inst, {{1, 3}})) == ids(inst, {{1, 3}}));
  CHECK(find_fitting_cover_3(inst, 1, ids(inst, {{0, 3}})) == ids(inst, {{1, 3}}));
  CHECK(find_fitting_cover_3(inst, 1, ids(inst, {{0, 3}, {1, 3}})) == ids(inst, {{1, 3}}));
  CHECK(find_fitting_cover_3(inst, 1, ids(inst, {{0, 1}})).empty());
}

TEST_CASE("no stems means no bad 2-stem trees") {
  auto inst = closed(4, 0, {{0, 1}, {0, 2}, {0, 3}}, {{1, 2}, {2, 3}, {1, 3}});
  auto an = compute_anatomy(inst);
  auto m = build_m(inst, an);
  CHECK(maximal_bad_2stem_trees(inst, an, m).empty());
}

TEST_CASE("bad 2-stem detection agrees with the definition") {
  std::mt19937_64 rng(31);
  int bad = 0, checked = 0;
  for (int it = 0; it < 60000; ++it) {
    int n = 7 + it % 4;
    auto r = random_raw(n, 0.15 + 0.05 * (it % 5), rng);
    if (!validate_feasible(r)) continue;
    auto inst = shadow_close(r);
    auto an = compute_anatomy(inst);
    if (an.stems.size() < 2) continue;
    auto m = build_m(inst, an);
    auto view = TreeView::identity(inst);
    for (NodeId v = 0; v < n; ++v) {
      auto cert = is_bad_2stem(inst, an, m, v);
      ++checked;
      REQUIRE(cert.has_value() == bad_by_definition(inst, an, m, v));
      if (!cert) continue;
      ++bad;
      CHECK(cert->cover.size() <= 3);
      CHECK(covers_subtree(inst, v, cert->cover));
      CHECK(cert->fitting.size() <= 3);
      CHECK(is_fitting_cover(view, v, cert->fitting));
      CHECK(m.mate[cert->u1] < 0);
      CHECK(m.mate[cert->u2] < 0);
      CHECK(m.mate[cert->w1] == cert->w2);
    }
  }
  CHECK(checked > 1000);
  CHECK(bad > 0);
}

TEST_CASE("preprocessing leaves no bad 2-stem tree or fully exposed bud triple behind") {
  std::mt19937_64 rng(37);
  int prep1 = 0, prep2 = 0;
  for (int it = 0; it < 4000; ++it) {
    auto r = random_raw(6 + it % 7, 0.15 + 0.05 * (it % 4), rng);
    if (!validate_feasible(r)) continue;
    auto inst = shadow_close(r);
    SolverState state(inst, SolveOptions{});
    preprocessing_step1(state);
    const TreeView& v1 = state.tree.view();
    for (const auto& c : maximal_bad_2stem_trees(inst, state.anatomy, state.matching)) {
      // Every certificate is now inside one compound.
      CHECK(v1.is_compound(v1.node_of(c.v)));
      CHECK(v1.node_of(c.u1) == v1.node_of(c.v));
    }
    size_t before = state.picked.size();
    preprocessing_step2(state);
    prep1 += state.stats.prep1;
    prep2 += state.stats.prep2;
    CHECK(state.picked.size() == before + 2 * static_cast<size_t>(state.stats.prep2));
    const TreeView& v2 = state.tree.view();
    for (NodeId b0 : state.anatomy.buds) {
      NodeId b2 = state.anatomy.bud_third.at(b0);
      NodeId b1 = -1;
      for (NodeId x : state.anatomy.leaves)
        if (x != b0 && state.anatomy.stem_of[x] == state.anatomy.stem_of[b0]) b1 = x;
      const auto& mate = state.matching.mate;
      if (mate[b0] >= 0 || mate[b1] >= 0 || mate[b2] >= 0) continue;
      CHECK_FALSE(v2.is_original(v2.node_of(b0)));
    }
  }
  CHECK(prep1 > 0);
  CHECK(prep2 > 0);
}
