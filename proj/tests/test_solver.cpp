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

#include <json.hpp>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "tapx/oracle.hpp"
#include "tapx/solver.hpp"

using namespace tapx;
using namespace tapx::testing;

TEST_CASE("single edge") {
  auto inst = raw(2, 0, {{0, 1}}, {{0, 1}});
  auto sol = solve(inst);
  CHECK(sol.picked == std::vector<int>{0});
}

TEST_CASE("star-stem is solved optimally") {
  auto inst = raw(4, 0, {{0, 1}, {1, 2}, {1, 3}}, {{2, 3}, {2, 0}});
  auto sol = solve(inst);
  CHECK(sol.picked == std::vector<int>{0, 1});
  CHECK(sol.stats.greedy == 2);
  CHECK(sol.stats.iterations == 0);
}

TEST_CASE("infeasible input is reported") {
  auto inst = raw(3, 0, {{0, 1}, {1, 2}}, {{0, 1}});
  CHECK_THROWS_AS(solve(inst), InfeasibleError);
}

TEST_CASE("contracting a subtree with a cover that leaves it") {
  auto s = star_stem();
  SolverState state(s, SolveOptions{});
  CHECK_THROWS_AS(contract_chosen(state, 1, ids(s, {{0, 2}, {1, 3}})), InvariantViolation);
  CHECK_NOTHROW(contract_chosen(state, 0, ids(s, {{0, 2}, {1, 3}})));
  CHECK(state.tree.single_node());
}

TEST_CASE("solutions are covers, deterministic, and within the bound") {
  std::mt19937_64 rng(41);
  int runs = 0;
  for (int it = 0; it < 2500; ++it) {
    auto r = random_raw(4 + it % 9, 0.15 + 0.15 * (it % 3), rng);
    if (!validate_feasible(r)) continue;
    auto inst = shadow_close(r);
    auto a = solve_closed(inst);
    auto b = solve_closed(inst);
    CHECK(a.picked_closed == b.picked_closed);
    CHECK(verify_cover(inst, a.picked_closed));
    CHECK(verify_cover(r, input_to_links(r, a.picked)));
    auto opt = exact_opt(inst);
    REQUIRE(opt.exact);
    CHECK(2 * a.picked_closed.size() <= 3 * static_cast<size_t>(opt.size));
    ++runs;
  }
  CHECK(runs > 1000);
}

TEST_CASE("trace lines are JSON with the recorded steps") {
  auto inst = shadow_close(raw(4, 0, {{0, 1}, {1, 2}, {1, 3}}, {{2, 3}, {2, 0}}));
  SolveOptions opts;
  opts.trace = true;
  auto sol = solve_closed(inst, opts);
  REQUIRE(sol.trace.size() == 2);
  std::istringstream in(trace_to_jsonl(inst, sol.trace));
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["kind"] == "greedy");
    CHECK(j["credit"].get<double>() >= j["links"].size() + 1);
    ++n;
  }
  CHECK(n == 2);
  auto first = nlohmann::json::parse(trace_to_jsonl(inst, sol.trace).substr(0, trace_to_jsonl(inst, sol.trace).find('\n')));
  CHECK(first["links"] == nlohmann::json::parse("[[2,3]]"));
  CHECK(first["hit"] == nlohmann::json::parse("[1,2,3]"));
}

TEST_CASE("checks off gives the same answer") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 200; ++it) {
    auto r = random_raw(5 + it % 10, 0.25, rng);
    if (!validate_feasible(r)) continue;
    SolveOptions off;
    off.check = false;
    CHECK(solve(r).picked == solve(r, off).picked);
  }
}
