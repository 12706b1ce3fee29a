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

#ifndef TAPX_DEFICIENT_HPP
#define TAPX_DEFICIENT_HPP

#include <optional>
#include <span>
#include <vector>

#include "tapx/solver.hpp"

namespace tapx {

// View indices refer to the view the certificate was detected in.
struct Deficient3 {
  int v = -1;
  int a = -1;        // exposed leaf
  int b1 = -1;
  int b2 = -1;       // ceiling leaf
  int upper = -1;    // branch node of degree 4, or the upper of two degree-3 nodes
  int lower = -1;    // lower degree-3 node, -1 in the degree-4 shape
  LinkId matched = -1;   // b1b2
  LinkId swap_in = -1;   // ab1
};

struct Deficient4 {
  int v = -1;
  int stem = -1;     // view node of the stem
  int a = -1, b1 = -1, b2 = -1, c = -1;
  int p = -1;        // lowest common ancestor of stem and c
  LinkId matched = -1;  // b1b2
  LinkId latch = -1;    // c to stem
};

std::optional<Deficient3> detect_deficient3(const TreeView& view, std::span<const LinkId> matching,
                                            int v);
std::optional<Deficient4> detect_deficient4(const TreeView& view, const Anatomy& anatomy,
                                            std::span<const LinkId> matching, int v);

// Outermost certificates, ascending representative of the root.
std::vector<Deficient3> maximal_deficient3(const TreeView& view, std::span<const LinkId> matching);
std::vector<Deficient4> maximal_deficient4(const TreeView& view, const Anatomy& anatomy,
                                           std::span<const LinkId> matching);

struct SubtreeChoice {
  int v = -1;                 // view node of the current tree
  std::vector<LinkId> cover;  // fitting cover of its subtree
  std::vector<LinkId> latches;
  std::vector<LinkId> matching_used;  // matching after the ceiling swaps
};

// Chooses a subtree to contract next once greedy contraction is exhausted.
SubtreeChoice algorithm2(SolverState& state);

}  // namespace tapx

#endif  // TAPX_DEFICIENT_HPP
