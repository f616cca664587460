// Copyright 2026 The tritough Authors.
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

#include <algorithm>
#include <set>

#include "tritough/construct.hpp"
#include "tritough/errors.hpp"

namespace tritough {

ComponentGraph component_graph(const LabeledGraph& g) {
  const int n = g.graph.num_vertices();
  if (static_cast<int>(g.labels.size()) != n)
    throw LabelsMissing("component_graph needs one label per vertex");
  const Graph abs = g.graph.abstract();
  auto is_st = [&](Vertex v) {
    VertexClass c = g.labels[v].cls;
    return c == VertexClass::S || c == VertexClass::T1 || c == VertexClass::T2;
  };
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) removed[v] = is_st(v);
  Components comp = connected_components(abs, removed);

  ComponentGraph out;
  out.component_of = comp.id;
  out.quotient = Graph(comp.count);
  out.t_degree.assign(comp.count, 0);
  for (Vertex t = 0; t < n; ++t) {
    VertexClass c = g.labels[t].cls;
    if (c != VertexClass::T1 && c != VertexClass::T2) continue;
    std::vector<int> ends;
    for (Vertex x : abs.neighbors(t)) {
      if (g.labels[x].cls == VertexClass::S) continue;
      if (is_st(x))
        throw InvariantViolation("t_independent", "no T-T edge",
                                 std::to_string(t) + "-" + std::to_string(x));
      ends.push_back(comp.id[x]);
      ++out.t_degree[comp.id[x]];
    }
    if (ends.size() != 2) continue;
    if (ends[0] == ends[1] || out.quotient.has_edge(ends[0], ends[1]))
      throw InvariantViolation("component_graph_simple", "simple quotient",
                               "loop or parallel edge via " + std::to_string(t));
    out.quotient.add_edge(ends[0], ends[1]);
  }
  return out;
}

bool component_graph_matches_g0(const LabeledGraph& g) {
  ComponentGraph cg = component_graph(g);
  const int k = cg.quotient.num_vertices();
  if (k != g.reg.g0_n) return false;
  std::vector<Vertex> to_g0(k, -1);
  for (Vertex v = 0; v < g.graph.num_vertices(); ++v) {
    int c = cg.component_of[v];
    if (c < 0) continue;
    const VertexLabel& l = g.labels[v];
    Vertex target = l.cls == VertexClass::U_D ? g.reg.g0_w : l.i;
    if (to_g0[c] != -1 && to_g0[c] != target) return false;
    to_g0[c] = target;
  }
  std::set<Vertex> image(to_g0.begin(), to_g0.end());
  if (static_cast<int>(image.size()) != k || image.count(-1)) return false;
  std::vector<Edge> mapped;
  for (const Edge& e : cg.quotient.edges())
    mapped.emplace_back(to_g0[e.u], to_g0[e.v]);
  std::sort(mapped.begin(), mapped.end());
  std::vector<Edge> want = g.reg.g0_edges;
  std::sort(want.begin(), want.end());
  return mapped == want;
}

}  // namespace tritough
