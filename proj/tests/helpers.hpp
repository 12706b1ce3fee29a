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

#ifndef TAPX_TESTS_HELPERS_HPP
#define TAPX_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "tapx/instance.hpp"

namespace tapx::testing {

using Pairs = std::vector<std::pair<NodeId, NodeId>>;

inline TapInstance raw(int n, NodeId root, const Pairs& edges, const Pairs& links) {
  return TapInstance(RootedTree(n, root, edges), links);
}

inline TapInstance closed(int n, NodeId root, const Pairs& edges, const Pairs& links) {
  return shadow_close(raw(n, root, edges, links));
}

inline LinkId id_of(const TapInstance& inst, NodeId a, NodeId b) {
  auto id = inst.find_link(a, b);
  return id ? *id : -1;
}

inline std::vector<LinkId> ids(const TapInstance& inst, const Pairs& pairs) {
  std::vector<LinkId> out;
  for (auto [a, b] : pairs) out.push_back(id_of(inst, a, b));
  std::sort(out.begin(), out.end());
  return out;
}

// Root 0, stem 1 with leaves 2 and 3; input links {2,3} and {2,0}.
inline TapInstance star_stem() { return closed(4, 0, {{0, 1}, {1, 2}, {1, 3}}, {{2, 3}, {2, 0}}); }

// Random tree on n nodes (parent of v drawn among 0..v-1) with each node
// pair linked independently; the instance is whatever the draw gives.
template <typename Rng>
TapInstance random_raw(int n, double p, Rng& rng) {
  Pairs edges, links;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (unit(rng) < p) links.emplace_back(a, b);
  return raw(n, 0, edges, links);
}

// Random backbone path with small gadgets hung off it. Each gadget is a
// three- or four-leaf subtree carrying the leaf links that leave it short of
// credit after greedy contraction, plus one link leaving the gadget, so the
// latch and ceiling-swap paths of the subtree step get exercised.
template <typename Rng>
TapInstance gadget_raw(int max_gadgets, Rng& rng) {
  auto r = [&](int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); };
  Pairs edges, links;
  int n = 1;
  std::vector<int> spine{0};
  for (int i = 1 + r(4); i > 0; --i) {
    edges.emplace_back(spine.back(), n);
    spine.push_back(n++);
  }
  auto chain = [&](int from, int extra) {
    for (; extra > 0; --extra) {
      edges.emplace_back(from, n);
      from = n++;
    }
    return from;
  };
  auto on_spine = [&] { return spine[r(static_cast<int>(spine.size()))]; };
  for (int g = 1 + r(max_gadgets); g > 0; --g) {
    int v = n++;
    edges.emplace_back(on_spine(), v);
    int shape = r(3);
    if (shape == 0) {
      int a = n++, b1 = n++, b2 = n++;
      edges.insert(edges.end(), {{v, a}, {v, b1}, {v, b2}});
      links.insert(links.end(), {{b1, b2}, {a, b1}, {b2, on_spine()}});
    } else if (shape == 1) {
      int q = n++, b1 = n++, a = n++, b2 = n++;
      edges.insert(edges.end(), {{v, q}, {v, b1}, {q, a}, {q, b2}});
      links.insert(links.end(), {{b1, b2}, {a, b1}, {b2, on_spine()}});
    } else {
      int p = n++, s = n++, a = n++, b1 = n++;
      edges.insert(edges.end(), {{v, p}, {p, s}, {s, a}, {s, b1}});
      int c = n++;
      edges.emplace_back(chain(p, r(3)), c);
      int b2 = n++;
      edges.emplace_back(chain(r(2) ? v : p, r(3)), b2);
      links.insert(links.end(), {{b1, b2}, {c, s}, {a, b1}, {b2, on_spine()}});
      if (r(2)) links.emplace_back(c, p);
    }
  }
  for (int i = r(4); i > 0; --i) {
    int x = r(n), y = r(n);
    if (x != y) links.emplace_back(x, y);
  }
  links.emplace_back(spine.back(), 0);
  for (auto& l : links)
    if (rng() & 1) std::swap(l.first, l.second);
  std::shuffle(links.begin(), links.end(), rng);
  return raw(n, 0, edges, links);
}

}  // namespace tapx::testing

#endif  // TAPX_TESTS_HELPERS_HPP
