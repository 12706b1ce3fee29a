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
#include "tapx/oracle.hpp"

using namespace tapx;
using namespace tapx::testing;

TEST_CASE("exact optimum on small cases") {
  CHECK(exact_opt(closed(2, 0, {{0, 1}}, {{0, 1}})).size == 1);
  CHECK(exact_opt(star_stem()).size == 2);
  CHECK(exact_opt(closed(4, 0, {{0, 1}, {1, 2}, {2, 3}}, {{0, 3}})).size == 1);
  CHECK_THROWS_AS(exact_opt(raw(3, 0, {{0, 1}, {1, 2}}, {{0, 2}})), Error);
}

TEST_CASE("size bound gives a bracket") {
  // Root 0 with five leaves and only leaf-to-root links: optimum 5.
  auto inst = closed(6, 0, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto r = exact_opt(inst, 3);
  CHECK_FALSE(r.exact);
  CHECK(r.lower == 4);
  CHECK(r.upper == 5);
  CHECK(exact_opt(inst).size == 5);
  auto tiny = exact_opt(inst, std::nullopt, 2);
  CHECK_FALSE(tiny.exact);
}

TEST_CASE("baseline and bounds") {
  auto s = star_stem();
  auto b = two_approx_closed(s);
  CHECK(b.picked_closed.size() == 2);
  CHECK(verify_cover(s, b.picked_closed));
  CHECK(two_approx(raw(2, 0, {{0, 1}}, {{0, 1}})).picked == std::vector<int>{0});
  CHECK(leaf_lower_bound(s) == 1);
  auto five = closed(6, 0, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, {{1, 2}, {3, 4}, {5, 0}});
  CHECK(leaf_lower_bound(five) == 3);
  CHECK(leaf_lower_bound(five, compute_anatomy(five)) == 3);
}

TEST_CASE("search over maximal links matches plain enumeration") {
  std::mt19937_64 rng(47);
  int runs = 0;
  for (int it = 0; it < 2500; ++it) {
    auto r = random_raw(3 + it % 6, 0.2 + 0.1 * (it % 4), rng);
    if (!validate_feasible(r)) continue;
    auto inst = shadow_close(r);
    auto fast = exact_opt(inst);
    auto slow = exact_opt_unrestricted(inst);
    REQUIRE(fast.exact);
    CHECK(fast.size == slow.size);
    CHECK(verify_cover(inst, fast.witness));
    CHECK(leaf_lower_bound(inst) <= fast.size);
    auto b = two_approx_closed(inst);
    CHECK(verify_cover(inst, b.picked_closed));
    CHECK(b.picked_closed.size() >= static_cast<size_t>(fast.size));
    CHECK(b.picked_closed.size() <= 2 * static_cast<size_t>(fast.size));
    ++runs;
  }
  CHECK(runs > 1000);
}

TEST_CASE("LP export on a three-node path") {
  auto inst = shadow_close(raw(3, 0, {{0, 1}, {1, 2}}, {{0, 2}}));
  auto text = export_lp0(inst);
  CHECK(text ==
        "\\ tree augmentation covering LP with overlap rows\n"
        "Minimize\n"
        " obj: x_0_2 + x_0_1 + x_1_2\n"
        "Subject To\n"
        " cov_1: x_0_2 + x_0_1 >= 1\n"
        " cov_2: x_0_2 + x_1_2 >= 1\n"
        " ovl_0: x_0_2 + x_0_1 <= 1\n"
        " ovl_1: x_0_2 + x_1_2 <= 1\n"
        "Bounds\n"
        " 0 <= x_0_2 <= 1\n"
        " 0 <= x_0_1 <= 1\n"
        " 0 <= x_1_2 <= 1\n"
        "End\n");
}

TEST_CASE("LP feasibility in exact arithmetic") {
  auto inst = shadow_close(raw(3, 0, {{0, 1}, {1, 2}}, {{0, 2}}));
  std::vector<Rational> zero(3, Rational(0)), half(3, Rational(1, 2));
  CHECK_FALSE(check_lp0_feasible(inst, zero));
  CHECK(check_lp0_feasible(inst, half));
  std::vector<Rational> one_link{Rational(1), Rational(0), Rational(0)};
  CHECK(check_lp0_feasible(inst, one_link));
  std::vector<Rational> both{Rational(1), Rational(1), Rational(0)};
  CHECK_FALSE(check_lp0_feasible(inst, both));
  std::vector<Rational> big{Rational(3, 2), Rational(0), Rational(0)};
  CHECK_FALSE(check_lp0_feasible(inst, big));
  // Node-disjoint paths: no overlap rows.
  auto apart = shadow_close(raw(3, 0, {{0, 1}, {0, 2}}, {{0, 1}, {0, 2}}));
  CHECK(overlapping_pairs(apart).empty());
}
