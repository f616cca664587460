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

#ifndef TRITOUGH_GRAPH_HPP_
#define TRITOUGH_GRAPH_HPP_

#include <span>
#include <utility>
#include <vector>

namespace tritough {

using Vertex = int;

// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  // Throws std::invalid_argument on loops, parallel edges or bad ids.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  // Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);

  // Subgraph induced on `keep`; vertex k of the result is keep[k].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int num_edges_ = 0;
};

// Component id per vertex (-1 for removed vertices) and the component count
// of g minus the vertices flagged in `removed` (may be empty).
struct Components {
  std::vector<int> id;
  int count = 0;
};
Components connected_components(const Graph& g,
                                 const std::vector<char>& removed = {});

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// Length of a shortest cycle, or 0 when g is a forest.
int girth(const Graph& g);

// Directed edge of an embedded graph.
struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Simple graph with a rotation system: for every vertex the cyclic order of
// its neighbours, clockwise around the vertex. Construction validates the
// rotation (symmetric, loop-free, no repeated neighbours) and throws
// EmbeddingInconsistent otherwise.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  explicit EmbeddedGraph(std::vector<std::vector<Vertex>> rotation);

  // Rotation from a straight-line drawing: neighbours sorted clockwise by the
  // direction of the segment leaving each vertex.
  static EmbeddedGraph from_straight_line(
      std::span<const std::pair<double, double>> points,
      std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return num_edges_; }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const {
    return rotation_;
  }

  // Neighbour following `from` clockwise around `at`.
  Vertex successor(Vertex at, Vertex from) const;
  // Index of `nbr` inside rotation(at), or -1.
  int position(Vertex at, Vertex nbr) const;

  Graph abstract() const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> rotation_;
  int num_edges_ = 0;
};

}  // namespace tritough

#endif  // TRITOUGH_GRAPH_HPP_
