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

using namespace tapx;
using namespace tapx::testing;

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Largest matching by trying every edge subset in increasing index order.
int brute_force(int n, const Edges& edges, size_t from = 0, unsigned used = 0) {
  int best = 0;
  for (size_t i = from; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if ((used >> a) & 1 || (used >> b) & 1) continue;
    best = std::max(best, 1 + brute_force(n, edges, i + 1, used | 1U << a | 1U << b));
  }
  return best;
}

bool is_matching(const Edges& edges, const std::vector<int>& chosen) {
  std::vector<int> seen(64, 0);
  for (int i : chosen) {
    auto [a, b] = edges[i];
    if (seen[a]++ || seen[b]++) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small matchings") {
  Edges tri{{0, 1}, {1, 2}, {0, 2}};
  CHECK(maximum_matching(3, tri).size() == 1);
  Edges path{{0, 1}, {1, 2}, {2, 3}};
  CHECK(maximum_matching(4, path) == std::vector<int>{0, 2});
  Edges c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  CHECK(maximum_matching(5, c5).size() == 2);
  CHECK(maximum_matching(4, Edges{}).empty());
}

TEST_CASE("blossom needing contraction") {
  // Odd cycle 1-2-3-4-5 with pendant 0 at 1 and pendant 6 at 3.
  Edges g{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 1}, {3, 6}};
  auto m = maximum_matching(7, g);
  CHECK(m.size() == 3);
  CHECK(is_matching(g, m));
}

TEST_CASE("random graphs match brute force") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 3000; ++it) {
    int n = 1 + static_cast<int>(rng() % 10);
    Edges g;
    double p = 0.1 + 0.1 * static_cast<double>(rng() % 8);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (static_cast<double>(rng() % 1000) < p * 1000) g.emplace_back(a, b);
    std::shuffle(g.begin(), g.end(), rng);
    auto m = maximum_matching(n, g);
    REQUIRE(is_matching(g, m));
    CHECK(static_cast<int>(m.size()) == brute_force(n, g));
    CHECK(maximum_matching(n, g) == m);
  }
}

TEST_CASE("leaf matching uses regular leaf-to-leaf links") {
  auto s = star_stem();
  auto m = build_m(s, compute_anatomy(s));
  CHECK(m.links.empty());
  CHECK(m.exposed == std::vector<NodeId>{2, 3});

  // Root 0 with leaves 1 and 2 and a link between them.
  auto two = closed(3, 0, {{0, 1}, {0, 2}}, {{1, 2}});
  auto m2 = build_m(two, compute_anatomy(two));
  CHECK(m2.links == std::vector<LinkId>{id_of(two, 1, 2)});
  CHECK(m2.mate[1] == 2);
  CHECK(m2.exposed.empty());

  auto none = closed(3, 0, {{0, 1}, {0, 2}}, {{0, 1}, {0, 2}});
  auto m3 = build_m(none, compute_anatomy(none));
  CHECK(m3.links.empty());
  CHECK(m3.exposed == std::vector<NodeId>{1, 2});
}
