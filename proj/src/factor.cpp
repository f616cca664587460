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

#include "tritough/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tritough/errors.hpp"
#include "tritough/matching.hpp"

namespace tritough {
namespace {

// 0 = free, 1 = S, 2 = T.
std::vector<char> membership(const Graph& g, const std::vector<Vertex>& S,
                             const std::vector<Vertex>& T) {
  std::vector<char> m(g.num_vertices(), 0);
  for (Vertex v : S) {
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("S vertex");
    m[v] = 1;
  }
  for (Vertex v : T) {
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("T vertex");
    if (m[v] == 1)
      throw OverlappingSets("vertex " + std::to_string(v) + " in S and T");
    m[v] = 2;
  }
  return m;
}

std::string census_string(const OddComponentCensus& c) {
  std::string s = "{";
  for (auto [k, v] : c.counts) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ": " + std::to_string(v);
  }
  return s + "}";
}

}  // namespace

int OddComponentCensus::odd_components() const {
  int total = 0;
  for (auto [k, v] : counts) total += v;
  return total;
}

OddComponentCensus odd_component_census(const Graph& g,
                                        const std::vector<Vertex>& S,
                                        const std::vector<Vertex>& T) {
  std::vector<char> m = membership(g, S, T);
  std::vector<char> removed(m.begin(), m.end());
  Components comp = connected_components(g, removed);
  std::vector<int> to_t(comp.count, 0);
  for (Vertex y = 0; y < g.num_vertices(); ++y) {
    if (m[y] != 2) continue;
    for (Vertex x : g.neighbors(y))
      if (comp.id[x] >= 0) ++to_t[comp.id[x]];
  }
  OddComponentCensus out;
  for (int e : to_t) {
    if (e % 2 == 1)
      ++out.counts[e];
    else
      ++out.even_components;
  }
  return out;
}

int delta(const Graph& g, const std::vector<Vertex>& S,
          const std::vector<Vertex>& T) {
  std::vector<char> m = membership(g, S, T);
  long sum_deg = 0;
  for (Vertex y : T)
    for (Vertex x : g.neighbors(y))
      if (m[x] != 1) ++sum_deg;
  const int c = odd_component_census(g, S, T).odd_components();
  return static_cast<int>(2L * static_cast<long>(S.size()) + sum_deg -
                          2L * static_cast<long>(T.size()) - c);
}

bool is_barrier(const Graph& g, const std::vector<Vertex>& S,
                const std::vector<Vertex>& T) {
  return delta(g, S, T) <= -2;
}

Barrier make_barrier(const Graph& g, std::vector<Vertex> S,
                     std::vector<Vertex> T) {
  Barrier b;
  b.delta = delta(g, S, T);
  b.census = odd_component_census(g, S, T);
  b.S = std::move(S);
  b.T = std::move(T);
  return b;
}

TutteGadget tutte_gadget(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> start(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2)
      throw DegreeTooSmall("vertex " + std::to_string(v) + " has degree " +
                           std::to_string(g.degree(v)));
    start[v + 1] = start[v] + 2 * g.degree(v) - 2;
  }
  TutteGadget out;
  out.graph = Graph(start[n]);
  out.edge_of.assign(start[n], Edge(-1, -1));
  out.owner.resize(start[n]);
  // External node of v for neighbour w: start[v] + index of w in adjacency.
  auto ext = [&](Vertex v, Vertex w) {
    const auto& a = g.neighbors(v);
    return start[v] +
           static_cast<int>(std::lower_bound(a.begin(), a.end(), w) - a.begin());
  };
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    for (int k = 0; k < 2 * d - 2; ++k) out.owner[start[v] + k] = v;
    for (int k = 0; k < d; ++k) {
      Vertex w = g.neighbors(v)[k];
      out.edge_of[start[v] + k] = Edge(v, w);
      for (int i = 0; i < d - 2; ++i)
        out.graph.add_edge(start[v] + k, start[v] + d + i);
      if (v < w) out.graph.add_edge(start[v] + k, ext(w, v));
    }
  }
  return out;
}

bool is_two_factor(const Graph& g, const std::vector<Edge>& factor) {
  std::vector<int> deg(g.num_vertices(), 0);
  std::vector<Edge> sorted = factor;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (const Edge& e : factor) {
    if (e.u < 0 || e.v >= g.num_vertices() || !g.has_edge(e.u, e.v))
      return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

TwoFactorResult has_two_factor(const Graph& g) {
  TwoFactorResult out;
  int short_by = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    short_by += std::max(0, 2 - g.degree(v));
  if (short_by > 0) {
    out.deficiency = short_by;
    return out;
  }
  TutteGadget gadget = tutte_gadget(g);
  MatchingResult m = max_matching(gadget.graph);
  const int nodes = gadget.graph.num_vertices();
  if (2 * m.size < nodes) {
    out.deficiency = nodes - 2 * m.size;
    return out;
  }
  for (const Edge& e : m.pairs) {
    const Edge& a = gadget.edge_of[e.u];
    const Edge& b = gadget.edge_of[e.v];
    if (a.u >= 0 && b.u >= 0) out.factor.push_back(a);
  }
  std::sort(out.factor.begin(), out.factor.end());
  if (!is_two_factor(g, out.factor))
    throw MatchingInvalid("gadget matching does not map to a 2-factor");
  out.feasible = true;
  return out;
}

VerificationReport verify_construction_barrier(const LabeledGraph& lg) {
  VerificationReport r;
  const Graph g = lg.graph.abstract();
  std::vector<Vertex> S = lg.vertices_of(VertexClass::S);
  std::vector<Vertex> T = lg.vertices_of(VertexClass::T1);
  std::vector<Vertex> t2 = lg.vertices_of(VertexClass::T2);
  T.insert(T.end(), t2.begin(), t2.end());
  std::sort(T.begin(), T.end());

  int tt_edges = 0;
  for (Vertex y : T)
    for (Vertex x : g.neighbors(y))
      if (x > y && std::binary_search(T.begin(), T.end(), x)) ++tt_edges;
  r.expect("T_independent", "0 edges inside T",
           std::to_string(tt_edges) + " edges inside T");

  OddComponentCensus census = odd_component_census(g, S, T);
  r.expect("no_even_components", "0", std::to_string(census.even_components));
  r.expect("odd_component_census", "{3: 120, 39: 1}", census_string(census));

  const int d = delta(g, S, T);
  r.expect("delta", "-2", std::to_string(d));
  r.add("parity", d % 2 == 0, "even", d % 2 == 0 ? "even" : "odd");

  // 2|S| - 2|T| + sum over odd components of (e(D,T) - 1), with the
  // 39-edge component listed last.
  long small = 0, large = 0;
  for (auto [k, v] : census.counts)
    (k == 39 ? large : small) += static_cast<long>(k - 1) * v;
  const long closed = 2L * S.size() - 2L * T.size() + small + large;
  r.expect("closed_form", "182-462+240+38=-2",
           std::to_string(2 * S.size()) + "-" + std::to_string(2 * T.size()) +
               "+" + std::to_string(small) + "+" + std::to_string(large) +
               "=" + std::to_string(closed));
  r.add("is_barrier", d <= -2, "delta <= -2", std::to_string(d));
  return r;
}

}  // namespace tritough
