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

#ifndef TRITOUGH_CONSTRUCT_HPP_
#define TRITOUGH_CONSTRUCT_HPP_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tritough/graph.hpp"

namespace tritough {

enum class VertexClass { S, T1, T2, U_TRI, U_D };

const char* to_string(VertexClass c);
// Throws ParseError on unknown names.
VertexClass vertex_class_from_string(std::string_view name);

// Construction coordinates; meaning depends on the class:
//   U_D    a_{i,j}
//   U_TRI  i = G0 vertex id (1..86 is v_i, 87..120 is u_{i-86}), j in 1..3
//   T2     i = index of the subdivided G0 edge
//   T1     i = id of the host vertex z
//   S      i = face id in G2, j = 0 for a face vertex, 1..3 for s_1..s_3
// In G0 itself w carries U_D (0,0) and every other vertex U_TRI (id,0).
struct VertexLabel {
  VertexClass cls = VertexClass::U_TRI;
  int i = 0;
  int j = 0;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct Spoke {
  // a_{1,j} t u_{i,1} u_{i,2} t v_{k,3}, or a_{1,j} t v_{k,3}.
  std::vector<Vertex> path;
  bool is_long() const { return path.size() == 6; }
  friend bool operator==(const Spoke&, const Spoke&) = default;
};

struct Registries {
  std::vector<std::vector<Vertex>> rings;            // A_1..A_4
  std::vector<std::array<Vertex, 3>> c3_triangles;   // by G0 id - 1
  std::vector<std::array<Vertex, 3>> s_triangles;
  std::vector<std::array<Vertex, 3>> s_triangle_groups;  // G0 only
  std::vector<Spoke> spokes;
  std::vector<Vertex> c0, c1, c;
  std::vector<Vertex> g0_u;
  Vertex g0_w = -1;
  int g0_n = 0;
  std::vector<Edge> g0_edges;    // G0 edge list; T2 index k subdivides edge k
  std::vector<Edge> link_edges;  // G1 edge replacing g0_edges[k]
  std::map<Vertex, std::string> names;   // G0 only
  std::map<Vertex, std::string> colors;  // G0 only, informational
  friend bool operator==(const Registries&, const Registries&) = default;
};

struct LabeledGraph {
  EmbeddedGraph graph;
  std::vector<VertexLabel> labels;
  Registries reg;

  std::vector<Vertex> vertices_of(VertexClass c) const;
  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

struct G0Census {
  int p = 0, q = 0, n = 0, e = 0, f = 0, f_s = 0;
  friend bool operator==(const G0Census&, const G0Census&) = default;
};

struct GraphCensus {
  int n = 0, e = 0, f = 0;
  std::map<VertexClass, int> classes;
};

// Text of the G0 file compiled into the library.
std::string_view bundled_g0_json();

// Parses and validates G0. Checks run in this order and the first failure
// throws InvariantViolation: n, cycle_length, u_count, bipartite, e, f,
// deg_w, degree_2, degree_3, girth, c0_face_cycle, s_triangle_faces.
LabeledGraph load_g0(std::string_view json_text);
LabeledGraph load_g0_file(const std::string& path);
LabeledGraph load_bundled_g0();

G0Census census_g0(const LabeledGraph& g0);
GraphCensus census(const LabeledGraph& g);

// G0 with every edge at w removed; vertex ids unchanged.
Graph g0_minus_w(const LabeledGraph& g0);

LabeledGraph build_d(int m = 39);

LabeledGraph step2(const LabeledGraph& g0, const LabeledGraph& d);
LabeledGraph step3(const LabeledGraph& g1);
LabeledGraph step4(const LabeledGraph& g2);

struct Pipeline {
  LabeledGraph g0, d, g1, g2, g;
};
Pipeline build_pipeline(const LabeledGraph& g0);
LabeledGraph build_full();

// G minus S, degree-2 T vertices smoothed, lower-degree T vertices dropped,
// each component of G - (S u T) contracted.
struct ComponentGraph {
  Graph quotient;
  std::vector<int> component_of;  // per vertex of g, -1 for S and T
  std::vector<int> t_degree;      // e_G(D, T) per quotient vertex
};
ComponentGraph component_graph(const LabeledGraph& g);

// Maps the quotient onto G0 ids through the labels and compares edge sets
// with reg.g0_edges.
bool component_graph_matches_g0(const LabeledGraph& g);

}  // namespace tritough

#endif  // TRITOUGH_CONSTRUCT_HPP_
