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

// Small graphs, random generators and brute-force oracles shared by tests.

#ifndef TRITOUGH_TESTS_SUPPORT_HPP_
#define TRITOUGH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "tritough/graph.hpp"

namespace tritough::testing {

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline EmbeddedGraph cycle_embedding(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
  return EmbeddedGraph(rot);
}

inline EmbeddedGraph k4_embedding() {
  return EmbeddedGraph({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

// Rotation read off a convex realisation: neighbours sorted by angle in the
// tangent plane at each vertex.
inline EmbeddedGraph icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> p;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      p.push_back({0, a, b});
      p.push_back({a, b, 0});
      p.push_back({b, 0, a});
    }
  const int n = 12;
  auto dist2 = [&](int i, int j) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (p[i][k] - p[j][k]) * (p[i][k] - p[j][k]);
    return s;
  };
  std::vector<std::vector<Vertex>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::vector<Vertex> nb;
    for (int u = 0; u < n; ++u)
      if (u != v && std::abs(dist2(u, v) - 4.0) < 1e-9) nb.push_back(u);
    const auto& z = p[v];
    std::array<double, 3> e1{}, e2{};
    // e1: direction to the first neighbour projected on the tangent plane.
    const double zz = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
    auto tangent = [&](int u) {
      std::array<double, 3> d{p[u][0] - z[0], p[u][1] - z[1], p[u][2] - z[2]};
      double t = (d[0] * z[0] + d[1] * z[1] + d[2] * z[2]) / zz;
      for (int k = 0; k < 3; ++k) d[k] -= t * z[k];
      return d;
    };
    e1 = tangent(nb[0]);
    e2 = {z[1] * e1[2] - z[2] * e1[1], z[2] * e1[0] - z[0] * e1[2],
          z[0] * e1[1] - z[1] * e1[0]};
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      auto ta = tangent(a), tb = tangent(b);
      double aa = std::atan2(ta[0] * e2[0] + ta[1] * e2[1] + ta[2] * e2[2],
                             ta[0] * e1[0] + ta[1] * e1[1] + ta[2] * e1[2]);
      double ab = std::atan2(tb[0] * e2[0] + tb[1] * e2[1] + tb[2] * e2[2],
                             tb[0] * e1[0] + tb[1] * e1[1] + tb[2] * e1[2]);
      return aa > ab;
    });
    rot[v] = nb;
  }
  return EmbeddedGraph(rot);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  Graph g = random_graph(rng, n, p);
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

// Maximum matching size by exhaustive branching on the lowest free vertex.
inline int brute_matching(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> used(n, 0);
  std::function<int(int)> go = [&](int v) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    int best = go(v + 1);
    for (Vertex u : g.neighbors(v)) {
      if (used[u]) continue;
      used[u] = 1;
      best = std::max(best, 1 + go(v + 1));
      used[u] = 0;
    }
    used[v] = 0;
    return best;
  };
  return go(0);
}

// Existence of a spanning 2-regular subgraph by edge-by-edge branching.
inline bool brute_two_factor(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  std::vector<int> deg(n, 0), left(n, 0);
  for (const Edge& e : edges) {
    ++left[e.u];
    ++left[e.v];
  }
  for (int v = 0; v < n; ++v)
    if (left[v] < 2) return false;
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == edges.size())
      return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    const Edge& e = edges[k];
    --left[e.u];
    --left[e.v];
    bool ok = false;
    if (deg[e.u] < 2 && deg[e.v] < 2) {
      ++deg[e.u];
      ++deg[e.v];
      if (deg[e.u] + left[e.u] >= 2 && deg[e.v] + left[e.v] >= 2)
        ok = go(k + 1);
      --deg[e.u];
      --deg[e.v];
    }
    if (!ok && deg[e.u] + left[e.u] >= 2 && deg[e.v] + left[e.v] >= 2)
      ok = go(k + 1);
    ++left[e.u];
    ++left[e.v];
    return ok;
  };
  return go(0);
}

// Minimum vertex cut by subset enumeration; n - 1 for complete graphs.
inline int brute_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  int best = n - 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k >= best || k > n - 2) continue;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1;
    if (connected_components(g, removed).count >= 2) best = k;
  }
  return best;
}

}  // namespace tritough::testing

#endif  // TRITOUGH_TESTS_SUPPORT_HPP_
