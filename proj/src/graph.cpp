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

#include "tritough/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "tritough/errors.hpp"

namespace tritough {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v)
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++num_edges_;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return false;
  a.erase(it);
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --num_edges_;
  return true;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(num_vertices(), -1);
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) index[keep[k]] = k;
  Graph h(static_cast<int>(keep.size()));
  for (int k = 0; k < static_cast<int>(keep.size()); ++k)
    for (Vertex v : adj_[keep[k]])
      if (index[v] > k) h.add_edge(k, index[v]);
  return h;
}

Components connected_components(const Graph& g,
                                const std::vector<char>& removed) {
  const int n = g.num_vertices();
  Components out;
  out.id.assign(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (out.id[s] != -1 || (!removed.empty() && removed[s])) continue;
    out.id[s] = out.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (out.id[w] != -1 || (!removed.empty() && removed[w])) continue;
        out.id[w] = out.count;
        stack.push_back(w);
      }
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).count <= 1;
}

bool is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  std::vector<int> dist(n), parent(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (best && 2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)) {
  const int n = num_vertices();
  long long darts = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      Vertex w = sorted[k];
      if (w < 0 || w >= n)
        throw EmbeddingInconsistent("vertex " + std::to_string(v) +
                                    " has out-of-range neighbour " +
                                    std::to_string(w));
      if (w == v)
        throw EmbeddingInconsistent("self-loop at " + std::to_string(v));
      if (k > 0 && sorted[k - 1] == w)
        throw EmbeddingInconsistent("repeated neighbour " + std::to_string(w) +
                                    " at " + std::to_string(v));
    }
    darts += static_cast<long long>(sorted.size());
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rotation_[v])
      if (position(w, v) < 0)
        throw EmbeddingInconsistent("asymmetric rotation: " +
                                    std::to_string(v) + " lists " +
                                    std::to_string(w) + " but not vice versa");
  num_edges_ = static_cast<int>(darts / 2);
}

EmbeddedGraph EmbeddedGraph::from_straight_line(
    std::span<const std::pair<double, double>> points,
    std::span<const Edge> edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (const Edge& e : edges) {
    rot[e.u].push_back(e.v);
    rot[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto angle = [&](Vertex w) {
      return std::atan2(points[w].second - points[v].second,
                        points[w].first - points[v].first);
    };
    // Clockwise is decreasing angle.
    std::sort(rot[v].begin(), rot[v].end(),
              [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
  }
  return EmbeddedGraph(std::move(rot));
}

int EmbeddedGraph::position(Vertex at, Vertex nbr) const {
  const auto& r = rotation_[at];
  auto it = std::find(r.begin(), r.end(), nbr);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

Vertex EmbeddedGraph::successor(Vertex at, Vertex from) const {
  const auto& r = rotation_[at];
  int p = position(at, from);
  if (p < 0)
    throw EmbeddingInconsistent("no dart " + std::to_string(from) + "->" +
                                std::to_string(at));
  return r[(p + 1) % r.size()];
}

Graph EmbeddedGraph::abstract() const {
  Graph g(num_vertices());
  for (Vertex v = 0; v < num_vertices(); ++v)
    for (Vertex w : rotation_[v])
      if (v < w) g.add_edge(v, w);
  return g;
}

}  // namespace tritough
