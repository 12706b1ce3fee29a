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

#include "tapx/matching.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace tapx {

std::vector<int> maximum_matching(int vertex_count, std::span<const std::pair<int, int>> edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
  Graph g(vertex_count);
  for (auto [a, b] : edges)
    if (a != b && !boost::edge(a, b, g).second) boost::add_edge(a, b, g);
  std::vector<Vertex> mate(vertex_count);
  boost::edmonds_maximum_cardinality_matching(g, mate.data());
  const Vertex none = boost::graph_traits<Graph>::null_vertex();
  std::vector<int> out;
  std::vector<char> taken(vertex_count, 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [a, c] = edges[i];
    if (a != c && mate[a] != none && static_cast<int>(mate[a]) == c && !taken[a]) {
      taken[a] = taken[c] = 1;
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

Matching build_m(const TapInstance& inst, const Anatomy& an) {
  int n = inst.node_count();
  std::vector<std::pair<int, int>> edges;
  std::vector<LinkId> ids;
  for (LinkId id : an.e_reg) {
    const Link& l = inst.link(id);
    if (an.is_leaf[l.u] && an.is_leaf[l.w]) {
      edges.emplace_back(l.u, l.w);
      ids.push_back(id);
    }
  }
  Matching m;
  m.mate.assign(n, -1);
  m.mate_link.assign(n, -1);
  for (int i : maximum_matching(n, edges)) {
    LinkId id = ids[i];
    const Link& l = inst.link(id);
    m.links.push_back(id);
    m.mate[l.u] = l.w;
    m.mate[l.w] = l.u;
    m.mate_link[l.u] = m.mate_link[l.w] = id;
  }
  std::sort(m.links.begin(), m.links.end());
  for (NodeId v : an.leaves)
    if (m.mate[v] < 0) m.exposed.push_back(v);
  return m;
}

}  // namespace tapx
