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

#include "tapx/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace tapx {

namespace {

// Edge sets as flat bit arrays, one block of words per link.
class EdgeMasks {
 public:
  EdgeMasks(const TapInstance& inst, std::span<const LinkId> links)
      : words_((inst.node_count() + 63) / 64), bits_(links.size() * words_, 0) {
    for (size_t i = 0; i < links.size(); ++i) {
      const Link& l = inst.link(links[i]);
      for (NodeId e : path_edges(inst.tree(), l.u, l.w)) bits_[i * words_ + e / 64] |= 1ULL << (e % 64);
    }
  }
  int words() const { return words_; }
  const std::uint64_t* mask(size_t i) const { return bits_.data() + i * words_; }

 private:
  int words_;
  std::vector<std::uint64_t> bits_;
};

struct DeepeningSearch {
  const TapInstance& inst;
  std::vector<LinkId> links;
  EdgeMasks masks;
  std::vector<std::vector<int>> covering;  // edge -> indices into links, fewest first helps
  std::vector<NodeId> edges;               // tree edges, fewest options first
  std::vector<char> leaf_edge;
  std::int64_t budget, nodes = 0;
  std::vector<int> chosen;

  DeepeningSearch(const TapInstance& in, std::vector<LinkId> ls, std::int64_t b)
      : inst(in), links(std::move(ls)), masks(in, links), covering(in.node_count()),
        leaf_edge(in.node_count(), 0), budget(b) {
    const auto& t = inst.tree();
    for (size_t i = 0; i < links.size(); ++i) {
      const Link& l = inst.link(links[i]);
      for (NodeId e : path_edges(t, l.u, l.w)) covering[e].push_back(static_cast<int>(i));
    }
    edges = t.edges();
    std::stable_sort(edges.begin(), edges.end(),
                     [&](NodeId a, NodeId b) { return covering[a].size() < covering[b].size(); });
    for (NodeId e : edges) leaf_edge[e] = t.is_leaf(e);
  }

  static bool has(const std::vector<std::uint64_t>& m, NodeId e) { return (m[e / 64] >> (e % 64)) & 1; }

  // 1 found, 0 exhausted, -1 budget.
  int dfs(std::vector<std::uint64_t>& cov, int left) {
    if (++nodes > budget) return -1;
    NodeId pick = -1;
    int open_leaves = 0;
    for (NodeId e : edges) {
      if (has(cov, e)) continue;
      if (pick < 0) pick = e;
      open_leaves += leaf_edge[e];
    }
    if (pick < 0) return 1;
    if (left == 0 || (open_leaves + 1) / 2 > left) return 0;
    std::vector<std::uint64_t> next(cov.size());
    for (int i : covering[pick]) {
      const std::uint64_t* m = masks.mask(i);
      for (size_t w = 0; w < cov.size(); ++w) next[w] = cov[w] | m[w];
      chosen.push_back(i);
      int r = dfs(next, left - 1);
      if (r != 0) return r;
      chosen.pop_back();
    }
    return 0;
  }
};

std::vector<LinkId> to_ids(const std::vector<LinkId>& links, const std::vector<int>& idx) {
  std::vector<LinkId> out;
  for (int i : idx) out.push_back(links[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExactResult exact_opt(const TapInstance& closed, std::optional<int> max_size,
                      std::int64_t node_budget) {
  if (!is_shadow_closed(closed)) throw Error("exact_opt needs a shadow-closed instance");
  if (!validate_feasible(closed)) throw InfeasibleError("some tree edge has no covering link");
  ExactResult res;
  auto baseline = two_approx_closed(closed);
  res.upper = static_cast<int>(baseline.picked_closed.size());
  res.witness = baseline.picked_closed;
  res.lower = leaf_lower_bound(closed);
  DeepeningSearch search(closed, maximal_links(closed), node_budget);
  int limit = max_size ? std::min(*max_size, res.upper) : res.upper;
  for (int k = std::max(res.lower, 1); k <= limit; ++k) {
    std::vector<std::uint64_t> cov(search.masks.words(), 0);
    search.chosen.clear();
    int r = search.dfs(cov, k);
    res.nodes = search.nodes;
    if (r < 0) return res;
    if (r > 0) {
      res.exact = true;
      res.size = res.lower = res.upper = k;
      res.witness = to_ids(search.links, search.chosen);
      ensure(verify_cover(closed, res.witness), "exact search witness is not a cover");
      return res;
    }
    res.lower = k + 1;
  }
  if (res.lower >= res.upper && (!max_size || res.upper <= *max_size)) {
    res.exact = true;
    res.size = res.lower = res.upper;
  }
  return res;
}

ExactResult exact_opt_unrestricted(const TapInstance& inst, int max_links) {
  int m = inst.link_count();
  if (m > max_links) throw Error("too many links for plain enumeration");
  if (!validate_feasible(inst)) throw InfeasibleError("some tree edge has no covering link");
  std::vector<LinkId> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  EdgeMasks masks(inst, all);
  std::vector<std::uint64_t> target(masks.words(), 0);
  for (NodeId e : inst.tree().edges()) target[e / 64] |= 1ULL << (e % 64);
  ExactResult res;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ++res.nodes;
      bool ok = true;
      for (int w = 0; w < masks.words() && ok; ++w) {
        std::uint64_t u = 0;
        for (int i : idx) u |= masks.mask(i)[w];
        ok = (u & target[w]) == target[w];
      }
      if (ok) {
        res.exact = true;
        res.size = res.lower = res.upper = k;
        res.witness.assign(idx.begin(), idx.end());
        return res;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InfeasibleError("no cover");
}

CoverSolution two_approx_closed(const TapInstance& closed) {
  if (!validate_feasible(closed)) throw InfeasibleError("some tree edge has no covering link");
  ContractedTree tree(closed);
  CoverSolution out;
  while (!tree.single_node()) {
    const TreeView& view = tree.view();
    int leaf = view.leaves().front();
    int up = up_current(view, leaf);
    LinkId id = *view.link_between(up, leaf);
    out.picked_closed.push_back(id);
    LinkId one[] = {id};
    tree.contract(one, "baseline");
  }
  std::sort(out.picked_closed.begin(), out.picked_closed.end());
  out.picked = expand_to_input(closed, out.picked_closed);
  return out;
}

CoverSolution two_approx(const TapInstance& inst) {
  if (!validate_feasible(inst)) throw InfeasibleError("some tree edge has no covering link");
  return two_approx_closed(shadow_close(inst));
}

int leaf_lower_bound(const TapInstance& inst) {
  int leaves = 0;
  for (NodeId v = 0; v < inst.node_count(); ++v) leaves += inst.tree().is_leaf(v);
  return (leaves + 1) / 2;
}

int leaf_lower_bound(const TapInstance&, const Anatomy& anatomy) {
  return (static_cast<int>(anatomy.leaves.size()) + 1) / 2;
}

std::vector<std::pair<LinkId, LinkId>> overlapping_pairs(const TapInstance& closed) {
  std::vector<std::pair<LinkId, LinkId>> out;
  for (LinkId i = 0; i < closed.link_count(); ++i)
    for (LinkId j = i + 1; j < closed.link_count(); ++j)
      if (is_overlapping_pair(closed, i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

std::string var(const TapInstance& inst, LinkId id) {
  return "x_" + std::to_string(inst.link(id).u) + "_" + std::to_string(inst.link(id).w);
}

void write_sum(std::ostringstream& out, const TapInstance& inst, const std::vector<LinkId>& ids) {
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i > 0 && i % 8 == 0) out << "\n  ";
    out << (i == 0 ? "" : " + ") << var(inst, ids[i]);
  }
}

}  // namespace

std::string export_lp0(const TapInstance& closed) {
  const auto& t = closed.tree();
  std::ostringstream out;
  std::vector<LinkId> all(closed.link_count());
  for (LinkId i = 0; i < closed.link_count(); ++i) all[i] = i;
  out << "\\ tree augmentation covering LP with overlap rows\n";
  out << "Minimize\n obj: ";
  write_sum(out, closed, all);
  out << "\nSubject To\n";
  for (NodeId e : t.edges()) {
    std::vector<LinkId> cov;
    for (LinkId id : all)
      if (covers(closed, id, e)) cov.push_back(id);
    out << " cov_" << e << ": ";
    write_sum(out, closed, cov);
    out << " >= 1\n";
  }
  int k = 0;
  for (auto [i, j] : overlapping_pairs(closed))
    out << " ovl_" << k++ << ": " << var(closed, i) << " + " << var(closed, j) << " <= 1\n";
  out << "Bounds\n";
  for (LinkId id : all) out << " 0 <= " << var(closed, id) << " <= 1\n";
  out << "End\n";
  return out.str();
}

bool check_lp0_feasible(const TapInstance& closed, std::span<const Rational> x) {
  if (x.size() != static_cast<size_t>(closed.link_count())) return false;
  for (const Rational& v : x)
    if (v < 0 || v > 1) return false;
  for (NodeId e : closed.tree().edges()) {
    Rational sum = 0;
    for (LinkId id = 0; id < closed.link_count(); ++id)
      if (covers(closed, id, e)) sum += x[id];
    if (sum < 1) return false;
  }
  for (auto [i, j] : overlapping_pairs(closed))
    if (x[i] + x[j] > 1) return false;
  return true;
}

}  // namespace tapx
