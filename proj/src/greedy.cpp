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

#include "tapx/greedy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tapx {

namespace {

using Word = std::uint64_t;

int words_for(int bits) { return (bits + 63) / 64; }
bool test(const Word* s, int i) { return (s[i >> 6] >> (i & 63)) & 1U; }
void set(Word* s, int i) { s[i >> 6] |= Word{1} << (i & 63); }

// Bits strictly above position v within word i.
Word above(int i, int v) {
  int wv = v >> 6;
  if (i < wv) return 0;
  if (i > wv) return ~Word{0};
  int b = v & 63;
  return b == 63 ? 0 : (~Word{0} << (b + 1));
}

// Enumerates connected candidate sets (connected = image paths share a node)
// one size at a time, extending a set only through neighbours of larger index
// than its minimum. Credit is tracked in quarter units so that a matching link
// with only one end reached can be bounded by 3/4 per end.
class CreditSearch {
 public:
  CreditSearch(const TreeView& view, std::span<const LinkId> matching,
               std::span<const LinkId> candidates)
      : view_(view), cand_(candidates.begin(), candidates.end()) {
    std::sort(cand_.begin(), cand_.end());
    k_ = view.size();
    w_ = words_for(k_);
    mc_ = static_cast<int>(cand_.size());
    wc_ = words_for(std::max(mc_, 1));

    cred_.assign(k_, 0);
    auto exposed = exposed_mask(view, matching);
    for (int x = 0; x < k_; ++x)
      cred_[x] = view.is_compound(x) || (view.is_original(x) && exposed[x]) ||
                 (x == view.root() && view.is_original(x));
    partners_.assign(k_, {});
    for (LinkId id : matching) {
      if (view.is_internal(id)) continue;
      auto [a, b] = view.image(id);
      partners_[a].push_back(b);
      partners_[b].push_back(a);
    }

    paths_.resize(mc_);
    bits_.assign(static_cast<size_t>(mc_) * w_, 0);
    static_.assign(mc_, 0);
    for (int i = 0; i < mc_; ++i) {
      paths_[i] = view.link_path(cand_[i]);
      for (int x : paths_[i]) {
        set(&bits_[static_cast<size_t>(i) * w_], x);
        static_[i] += 4 * cred_[x] + 6 * static_cast<int>(partners_[x].size());
      }
    }
    adj_.assign(static_cast<size_t>(mc_) * wc_, 0);
    for (int i = 0; i < mc_; ++i)
      for (int j = i + 1; j < mc_; ++j) {
        const Word* a = &bits_[static_cast<size_t>(i) * w_];
        const Word* b = &bits_[static_cast<size_t>(j) * w_];
        bool meet = false;
        for (int t = 0; t < w_ && !meet; ++t) meet = (a[t] & b[t]) != 0;
        if (meet) {
          set(&adj_[static_cast<size_t>(i) * wc_], j);
          set(&adj_[static_cast<size_t>(j) * wc_], i);
        }
      }
    by_static_.resize(mc_);
    for (int i = 0; i < mc_; ++i) by_static_[i] = i;
    std::stable_sort(by_static_.begin(), by_static_.end(),
                     [&](int a, int b) { return static_[a] > static_[b]; });
  }

  std::optional<std::vector<LinkId>> run(int max_size) {
    for (int size = 1; size <= max_size && size <= mc_; ++size) {
      target_ = size;
      best_.clear();
      node_.assign(static_cast<size_t>(size + 1) * w_, 0);
      ext_.assign(static_cast<size_t>(size + 1) * wc_, 0);
      closed_.assign(static_cast<size_t>(size + 1) * wc_, 0);
      quarters_.assign(size + 1, 0);
      chosen_.clear();
      for (int v = 0; v < mc_; ++v) {
        // Every set found from v has v as its smallest index.
        if (!best_.empty() && v > best_.front()) break;
        std::fill(node_.begin(), node_.begin() + w_, 0);
        quarters_[0] = 0;
        quarters_[1] = gain(v, &node_[0]);
        Word* n1 = &node_[static_cast<size_t>(w_)];
        std::copy(node_.begin(), node_.begin() + w_, n1);
        for (int x : paths_[v]) set(n1, x);
        Word* e1 = &ext_[static_cast<size_t>(wc_)];
        Word* c1 = &closed_[static_cast<size_t>(wc_)];
        const Word* av = &adj_[static_cast<size_t>(v) * wc_];
        for (int t = 0; t < wc_; ++t) {
          e1[t] = av[t] & above(t, v);
          c1[t] = av[t];
        }
        set(c1, v);
        chosen_.push_back(v);
        extend(1, v);
        chosen_.pop_back();
      }
      if (!best_.empty()) {
        std::vector<LinkId> out;
        for (int i : best_) out.push_back(cand_[i]);
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  // Exact credit increase (quarters) from adding candidate i to node set n.
  int gain(int i, const Word* n) const {
    int q = 0;
    // Nodes of the same path join one after another.
    std::vector<int> fresh;
    for (int x : paths_[i])
      if (!test(n, x)) fresh.push_back(x);
    for (size_t a = 0; a < fresh.size(); ++a) {
      int x = fresh[a];
      q += 4 * cred_[x];
      for (int y : partners_[x]) {
        bool reached = test(n, y);
        for (size_t b = 0; b < a && !reached; ++b) reached = fresh[b] == y;
        if (reached) q += 6;
      }
    }
    return q;
  }

  // Upper bound on the credit increase from adding candidate i.
  int optimistic(int i, const Word* n) const {
    int q = 0;
    for (int x : paths_[i]) {
      if (test(n, x)) continue;
      q += 4 * cred_[x];
      for (int y : partners_[x]) q += test(n, y) ? 6 : 3;
    }
    return q;
  }

  void extend(int depth, int v) {
    Word* n = &node_[static_cast<size_t>(depth) * w_];
    int need = 4 * (target_ + 1);
    if (depth == target_) {
      if (quarters_[depth] >= need) {
        std::vector<int> s = chosen_;
        std::sort(s.begin(), s.end());
        if (best_.empty() || s < best_) best_ = s;
      }
      return;
    }
    Word* ext = &ext_[static_cast<size_t>(depth) * wc_];
    Word* closed = &closed_[static_cast<size_t>(depth) * wc_];

    int r = target_ - depth;
    int top[8] = {0};
    int count = 0;
    for (int u : by_static_) {
      if (count == r && static_[u] <= top[r - 1]) break;
      bool eligible = test(ext, u) || (u > v && !test(closed, u));
      if (!eligible) continue;
      int m = optimistic(u, n);
      int pos;
      if (count < r) {
        pos = count++;
      } else if (m > top[r - 1]) {
        pos = r - 1;
      } else {
        continue;
      }
      top[pos] = m;
      for (int p = pos; p > 0 && top[p] > top[p - 1]; --p) std::swap(top[p], top[p - 1]);
    }
    int bound = quarters_[depth];
    for (int i = 0; i < count; ++i) bound += top[i];
    if (bound < need) return;

    Word* next_n = &node_[static_cast<size_t>(depth + 1) * w_];
    Word* next_e = &ext_[static_cast<size_t>(depth + 1) * wc_];
    Word* next_c = &closed_[static_cast<size_t>(depth + 1) * wc_];
    for (int t = 0; t < wc_; ++t) {
      while (ext[t]) {
        int w = t * 64 + std::countr_zero(ext[t]);
        ext[t] &= ext[t] - 1;
        const Word* aw = &adj_[static_cast<size_t>(w) * wc_];
        for (int s = 0; s < wc_; ++s) {
          next_e[s] = ext[s] | (aw[s] & ~closed[s] & above(s, v));
          next_c[s] = closed[s] | aw[s];
        }
        set(next_c, w);
        quarters_[depth + 1] = quarters_[depth] + gain(w, n);
        std::copy(n, n + w_, next_n);
        for (int x : paths_[w]) set(next_n, x);
        chosen_.push_back(w);
        extend(depth + 1, v);
        chosen_.pop_back();
      }
    }
  }

  const TreeView& view_;
  std::vector<LinkId> cand_;
  int k_ = 0, w_ = 0, mc_ = 0, wc_ = 0, target_ = 0;
  std::vector<int> cred_;
  std::vector<std::vector<int>> partners_;
  std::vector<std::vector<int>> paths_;
  std::vector<Word> bits_, adj_;
  std::vector<int> static_, by_static_;
  std::vector<Word> node_, ext_, closed_;
  std::vector<int> quarters_;
  std::vector<int> chosen_, best_;
};

}  // namespace

std::optional<GreedyChoice> find_credit_contraction(const TreeView& view,
                                                    std::span<const LinkId> matching,
                                                    std::span<const LinkId> candidates,
                                                    int max_size) {
  if (view.size() < 2) return std::nullopt;
  CreditSearch search(view, matching, candidates);
  auto found = search.run(max_size);
  if (!found) return std::nullopt;
  GreedyChoice choice;
  choice.links = *found;
  choice.credit = integral_credit(view, matching, choice.links);
  ensure(choice.credit.half_units >= 2 * (static_cast<int>(choice.links.size()) + 1),
         "greedy search returned a set without enough credit");
  return choice;
}

std::optional<GreedyChoice> find_greedy_contraction(const SolverState& state) {
  const TreeView& view = state.tree.view();
  auto cand = maximal_links(view);
  return find_credit_contraction(view, state.matching.links, cand, state.options.max_greedy);
}

int saturate_greedy(SolverState& state) {
  int count = 0;
  while (!state.tree.single_node()) {
    auto choice = find_greedy_contraction(state);
    if (!choice) break;
    state.pick(choice->links);
    int x = state.contract(choice->links, "greedy");
    ++count;
    ++state.stats.greedy;
    TraceRecord rec;
    rec.kind = "greedy";
    rec.links = choice->links;
    rec.hit = state.tree.history().back().hit;
    rec.node = state.tree.view().rep(x);
    rec.credit_half = choice->credit.half_units;
    rec.cost = static_cast<int>(choice->links.size()) + 1;
    rec.detail = choice->credit.describe();
    state.record(std::move(rec));
  }
  return count;
}

void check_saturated(const TreeView& view, std::span<const LinkId> matching) {
  for (LinkId id : matching) {
    if (view.is_internal(id)) continue;
    auto [a, b] = view.image(id);
    ensure(view.is_original(a) && view.is_leaf(a) && view.is_original(b) && view.is_leaf(b),
           "matching link does not join two original leaves after saturation");
    for (int x : view.path(a, b))
      ensure(view.is_original(x), "matching link path crosses a merged node after saturation");
  }
  auto exposed = exposed_mask(view, matching);
  for (int x = 0; x < view.size(); ++x) {
    if (!exposed[x]) continue;
    for (LinkId id : view.incident(x)) {
      auto [a, b] = view.image(id);
      ensure(!exposed[a == x ? b : a], "link joins two exposed leaves after saturation");
    }
  }
}

}  // namespace tapx
