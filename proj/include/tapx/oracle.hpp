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

#ifndef TAPX_ORACLE_HPP
#define TAPX_ORACLE_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tapx/anatomy.hpp"
#include "tapx/solver.hpp"

namespace tapx {

struct ExactResult {
  bool exact = false;        // false when the budget ran out
  int size = -1;             // optimum when exact
  int lower = 0, upper = 0;  // bracket; equal to size when exact
  std::vector<LinkId> witness;  // best cover found, closed ids, ascending
  std::int64_t nodes = 0;       // search nodes visited
};

// Minimum cover over the maximal links of a shadow-closed instance, by
// iterative deepening. With max_size set, stops once that bound is passed
// and reports exact = false, size = -1.
ExactResult exact_opt(const TapInstance& closed, std::optional<int> max_size = std::nullopt,
                      std::int64_t node_budget = 200'000'000);

// Plain enumeration of all link subsets by increasing size. For tiny n only.
ExactResult exact_opt_unrestricted(const TapInstance& inst, int max_links = 40);

// Repeatedly join the leaf with the smallest representative to its highest
// reachable ancestor and contract.
CoverSolution two_approx(const TapInstance& inst);
CoverSolution two_approx_closed(const TapInstance& closed);

int leaf_lower_bound(const TapInstance& inst);
int leaf_lower_bound(const TapInstance& inst, const Anatomy& anatomy);

// Unordered overlapping pairs (i < j) of a shadow-closed instance.
std::vector<std::pair<LinkId, LinkId>> overlapping_pairs(const TapInstance& closed);

// CPLEX-style LP text: covering row per tree edge, one row per overlapping
// pair, 0 <= x <= 1. Variables x_<u>_<w>.
std::string export_lp0(const TapInstance& closed);

using Rational = boost::rational<long long>;
// x is indexed by link id.
bool check_lp0_feasible(const TapInstance& closed, std::span<const Rational> x);

}  // namespace tapx

#endif  // TAPX_ORACLE_HPP
