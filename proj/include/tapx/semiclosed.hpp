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

#ifndef TAPX_SEMICLOSED_HPP
#define TAPX_SEMICLOSED_HPP

#include <span>
#include <vector>

#include "tapx/contract.hpp"

namespace tapx {

// The matching is given as original link ids; only non-internal images count.
// Semiclosed: no matching link crosses the boundary of the subtree at v, and
// every link at an exposed leaf inside stays inside.
bool is_semiclosed(const TreeView& view, std::span<const LinkId> matching, int v);

// First semiclosed subtree in bottom-up order (height, deeper, smaller id).
int minimally_semiclosed(const TreeView& view, std::span<const LinkId> matching);

// Matching links inside the subtree plus one up-link per exposed leaf inside,
// ascending and deduplicated.
std::vector<LinkId> gamma(const TreeView& view, std::span<const LinkId> matching, int v);

// The image paths cover exactly the edges of the subtree at v.
bool is_fitting_cover(const TreeView& view, int v, std::span<const LinkId> links);

}  // namespace tapx

#endif  // TAPX_SEMICLOSED_HPP
