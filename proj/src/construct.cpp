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

#include "tritough/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "tritough/errors.hpp"
#include "tritough/faces.hpp"

namespace tritough {
namespace {

constexpr Vertex kPlaceholder = -1;

void insert_after(std::vector<Vertex>& rot, Vertex after, Vertex x) {
  auto it = std::find(rot.begin(), rot.end(), after);
  if (it == rot.end())
    throw EmbeddingInconsistent("corner anchor " + std::to_string(after) +
                                " missing");
  rot.insert(it + 1, x);
}

void replace_in(std::vector<Vertex>& rot, Vertex from, Vertex to) {
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end())
    throw EmbeddingInconsistent("neighbour " + std::to_string(from) +
                                " missing");
  *it = to;
}

void require_euler(const EmbeddedGraph& g, const char* step) {
  if (!satisfies_euler(g))
    throw EmbeddingInconsistent(std::string(step) +
                                ": rotation system is not a plane embedding");
}

const FaceCycle* unique_long_face(const std::vector<FaceCycle>& fs) {
  const FaceCycle* out = nullptr;
  for (const FaceCycle& f : fs) {
    if (f.length() == 3) continue;
    if (out) return nullptr;
    out = &f;
  }
  return out;
}

}  // namespace

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::S: return "S";
    case VertexClass::T1: return "T1";
    case VertexClass::T2: return "T2";
    case VertexClass::U_TRI: return "U_TRI";
    case VertexClass::U_D: return "U_D";
  }
  return "?";
}

VertexClass vertex_class_from_string(std::string_view name) {
  for (VertexClass c : {VertexClass::S, VertexClass::T1, VertexClass::T2,
                        VertexClass::U_TRI, VertexClass::U_D})
    if (name == to_string(c)) return c;
  throw ParseError("unknown vertex class '" + std::string(name) + "'");
}

std::vector<Vertex> LabeledGraph::vertices_of(VertexClass c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(labels.size()); ++v)
    if (labels[v].cls == c) out.push_back(v);
  return out;
}

GraphCensus census(const LabeledGraph& g) {
  GraphCensus c;
  c.n = g.graph.num_vertices();
  c.e = g.graph.num_edges();
  c.f = static_cast<int>(faces(g.graph).size());
  for (const VertexLabel& l : g.labels) ++c.classes[l.cls];
  return c;
}

LabeledGraph build_d(int m) {
  if (m < 5) throw ParameterOutOfRange("ring length must be at least 5");
  auto a = [m](int i, int j) { return (i - 1) * m + (j - 1); };
  auto wrap = [m](int j) { return (j - 1) % m + 1; };
  std::vector<std::pair<double, double>> pts(4 * m);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= m; ++j) {
      double r = 5 - i;
      double th = 2 * std::numbers::pi * (j - 1) / m;
      pts[a(i, j)] = {r * std::cos(th), r * std::sin(th)};
    }
  std::vector<Edge> edges;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= m; ++j) edges.emplace_back(a(i, j), a(i, wrap(j + 1)));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= m; ++j) {
      edges.emplace_back(a(i, j), a(i + 1, j));
      edges.emplace_back(a(i, j), a(i + 1, wrap(j + 1)));
    }
  for (int j = 3; j <= m - 1; ++j) edges.emplace_back(a(4, 1), a(4, j));

  LabeledGraph d;
  d.graph = EmbeddedGraph::from_straight_line(pts, edges);
  require_euler(d.graph, "build_d");
  d.labels.resize(4 * m);
  d.reg.rings.resize(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= m; ++j) {
      d.labels[a(i, j)] = {VertexClass::U_D, i, j};
      d.reg.rings[i - 1].push_back(a(i, j));
    }
  return d;
}

LabeledGraph step2(const LabeledGraph& g0, const LabeledGraph& d) {
  const EmbeddedGraph& h = g0.graph;
  const Vertex w = g0.reg.g0_w;
  const int n0 = h.num_vertices();
  const int nd = d.graph.num_vertices();

  // Outer walk of D, rotated to start at a_{1,1}.
  std::vector<FaceCycle> dfaces = faces(d.graph);
  const FaceCycle* outer = unique_long_face(dfaces);
  if (!outer) throw ParameterOutOfRange("D is not a near triangulation");
  std::vector<Vertex> walk = outer->vertices();
  const Vertex a11 = d.reg.rings.at(0).at(0);
  std::rotate(walk.begin(), std::find(walk.begin(), walk.end(), a11),
              walk.end());
  if (static_cast<int>(walk.size()) != h.degree(w))
    throw ParameterOutOfRange("outer face of D has length " +
                              std::to_string(walk.size()) + ", deg(w) is " +
                              std::to_string(h.degree(w)));

  // Step 2.1: rotation-aligned matching N(w) <-> V(A_1).
  std::vector<Vertex> d_match(n0, -1);
  for (int k = 0; k < h.degree(w); ++k) d_match[h.rotation(w)[k]] = walk[k];

  // Triangle vertex ids, by G0 vertex id with w skipped.
  std::vector<int> tri_index(n0, -1);
  int count = 0;
  for (Vertex x = 0; x < n0; ++x)
    if (x != w) tri_index[x] = count++;
  std::vector<int> cyc_pos(n0, -1);
  const int clen = static_cast<int>(g0.reg.c0.size());
  for (int i = 0; i < clen; ++i) cyc_pos[g0.reg.c0[i]] = i;
  std::vector<char> is_u(n0, 0);
  for (Vertex x : g0.reg.g0_u) is_u[x] = 1;

  auto label = [&](Vertex x, Vertex nbr) -> int {
    if (cyc_pos[x] >= 0) {
      int i = cyc_pos[x];
      if (nbr == g0.reg.c0[(i + clen - 1) % clen]) return 1;
      if (nbr == g0.reg.c0[(i + 1) % clen]) return 2;
      return 3;
    }
    if (nbr == w) return 1;
    if (nbr == kPlaceholder) return 3;
    return 2;
  };
  auto tri = [&](Vertex x, int j) { return nd + 3 * tri_index[x] + (j - 1); };
  auto endpoint = [&](Vertex x, Vertex nbr) -> Vertex {
    return x == w ? d_match[nbr] : tri(x, label(x, nbr));
  };

  // Degree-2 vertices get a placeholder in the corner of their face.
  FaceTrace t0 = trace_faces(h);
  std::vector<std::vector<Vertex>> grot = h.rotations();
  for (const auto& grp : g0.reg.s_triangle_groups) {
    const FaceCycle* face = nullptr;
    for (const FaceCycle& f : t0.faces) {
      std::set<Vertex> vs;
      for (const Dart& dd : f.darts) vs.insert(dd.from);
      if (vs.count(grp[0]) && vs.count(grp[1]) && vs.count(grp[2])) face = &f;
    }
    if (!face) throw EmbeddingInconsistent("group without a face");
    const int len = face->length();
    for (int k = 0; k < len; ++k) {
      Vertex x = face->darts[k].from;
      if (std::find(grp.begin(), grp.end(), x) == grp.end()) continue;
      insert_after(grot[x], face->darts[(k + len - 1) % len].from,
                   kPlaceholder);
    }
  }

  const int n1 = nd + 3 * (n0 - 1);
  std::vector<std::vector<Vertex>> rot(n1);
  for (Vertex v = 0; v < nd; ++v) rot[v] = d.graph.rotation(v);
  const int wl = static_cast<int>(walk.size());
  for (int k = 0; k < wl; ++k) {
    Vertex x = h.rotation(w)[k];
    insert_after(rot[walk[k]], walk[(k + wl - 1) % wl], endpoint(x, w));
  }
  for (Vertex x = 0; x < n0; ++x) {
    if (x == w) continue;
    const auto& r = grot[x];
    if (r.size() != 3)
      throw EmbeddingInconsistent("vertex " + std::to_string(x) +
                                  " has no triangle-ready rotation");
    for (int k = 0; k < 3; ++k) {
      Vertex nbr = r[k];
      auto& out = rot[tri(x, label(x, nbr))];
      if (nbr != kPlaceholder) out.push_back(endpoint(nbr, x));
      out.push_back(tri(x, label(x, r[(k + 1) % 3])));
      out.push_back(tri(x, label(x, r[(k + 2) % 3])));
    }
  }

  LabeledGraph g1;
  g1.graph = EmbeddedGraph(std::move(rot));
  require_euler(g1.graph, "step2");
  g1.labels.resize(n1);
  for (Vertex v = 0; v < nd; ++v) g1.labels[v] = d.labels[v];
  g1.reg = g0.reg;
  g1.reg.names.clear();
  g1.reg.colors.clear();
  g1.reg.rings = d.reg.rings;
  for (Vertex x = 0; x < n0; ++x) {
    if (x == w) continue;
    std::array<Vertex, 3> t{tri(x, 1), tri(x, 2), tri(x, 3)};
    for (int j = 1; j <= 3; ++j)
      g1.labels[t[j - 1]] = {VertexClass::U_TRI, x, j};
    g1.reg.c3_triangles.push_back(t);
  }
  for (Vertex x : g0.reg.c0) {
    g1.reg.c1.push_back(tri(x, 1));
    g1.reg.c1.push_back(tri(x, 2));
  }
  for (const Edge& e : g0.reg.g0_edges)
    g1.reg.link_edges.emplace_back(endpoint(e.u, e.v), endpoint(e.v, e.u));
  return g1;
}

LabeledGraph step3(const LabeledGraph& g1) {
  const int n1 = g1.graph.num_vertices();
  const int ne = static_cast<int>(g1.reg.link_edges.size());
  std::vector<Vertex> hosts;
  for (Vertex v = 0; v < n1; ++v)
    if (g1.graph.degree(v) == 2) hosts.push_back(v);
  const int n2 = n1 + ne + static_cast<int>(hosts.size());

  std::vector<std::vector<Vertex>> rot = g1.graph.rotations();
  rot.resize(n2);
  LabeledGraph g2;
  g2.labels = g1.labels;
  g2.labels.resize(n2);
  for (int k = 0; k < ne; ++k) {
    const Edge& e = g1.reg.link_edges[k];
    const Vertex t = n1 + k;
    replace_in(rot[e.u], e.v, t);
    replace_in(rot[e.v], e.u, t);
    rot[t] = {e.u, e.v};
    g2.labels[t] = {VertexClass::T2, k, 0};
  }
  for (int k = 0; k < static_cast<int>(hosts.size()); ++k) {
    const Vertex z = hosts[k], t = n1 + ne + k;
    rot[z].push_back(t);
    rot[t] = {z};
    g2.labels[t] = {VertexClass::T1, z, 0};
  }
  g2.graph = EmbeddedGraph(std::move(rot));
  require_euler(g2.graph, "step3");
  g2.reg = g1.reg;

  // Spokes in clockwise order around w in G0.
  const Vertex w = g1.reg.g0_w;
  const int nd = static_cast<int>(g1.reg.rings.size() *
                                  g1.reg.rings.at(0).size());
  auto link = [&](Vertex a, Vertex b) {
    auto it = std::lower_bound(g1.reg.g0_edges.begin(), g1.reg.g0_edges.end(),
                               Edge(a, b));
    return static_cast<int>(it - g1.reg.g0_edges.begin());
  };
  std::vector<std::vector<Vertex>> g0_adj(g1.reg.g0_n);
  for (const Edge& e : g1.reg.g0_edges) {
    g0_adj[e.u].push_back(e.v);
    g0_adj[e.v].push_back(e.u);
  }
  std::set<Vertex> us(g1.reg.g0_u.begin(), g1.reg.g0_u.end());
  // Sort spokes by position of their D end along A_1.
  std::vector<std::pair<int, Spoke>> spokes;
  for (Vertex x : g0_adj[w]) {
    int k = link(w, x);
    const Edge& le = g1.reg.link_edges[k];
    Vertex a = le.u < nd ? le.u : le.v;
    Vertex near = le.u < nd ? le.v : le.u;
    Spoke s;
    s.path = {a, n1 + k, near};
    if (us.count(x)) {
      Vertex y = g0_adj[x][0] == w ? g0_adj[x][1] : g0_adj[x][0];
      int k2 = link(x, y);
      const Edge& le2 = g1.reg.link_edges[k2];
      Vertex u2 = g1.labels[le2.u].i == x ? le2.u : le2.v;
      Vertex v3 = u2 == le2.u ? le2.v : le2.u;
      s.path.push_back(u2);
      s.path.push_back(n1 + k2);
      s.path.push_back(v3);
    }
    spokes.emplace_back(g1.labels[a].j, std::move(s));
  }
  std::sort(spokes.begin(), spokes.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& [_, s] : spokes) g2.reg.spokes.push_back(std::move(s));

  std::map<Edge, int> link_index;
  for (int k = 0; k < ne; ++k) link_index[g1.reg.link_edges[k]] = k;
  const auto& c1 = g1.reg.c1;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    Vertex a = c1[i], b = c1[(i + 1) % c1.size()];
    g2.reg.c.push_back(a);
    auto it = link_index.find(Edge(a, b));
    if (it != link_index.end()) g2.reg.c.push_back(n1 + it->second);
  }
  return g2;
}

LabeledGraph step4(const LabeledGraph& g2) {
  const EmbeddedGraph& h = g2.graph;
  const int n2 = h.num_vertices();
  std::vector<FaceCycle> fs = faces(h);
  std::vector<std::vector<Vertex>> rot = h.rotations();
  LabeledGraph g;
  g.labels = g2.labels;
  g.reg = g2.reg;
  Vertex next = n2;
  auto fresh = [&](int face, int j) {
    rot.emplace_back();
    g.labels.push_back({VertexClass::S, face, j});
    return next++;
  };

  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
    const std::vector<Vertex> walk = fs[fi].vertices();
    const int len = static_cast<int>(walk.size());
    std::vector<int> pendant_pos;
    for (int k = 0; k < len; ++k)
      if (h.degree(walk[k]) == 1) pendant_pos.push_back(k);

    if (pendant_pos.empty()) {
      if (len == 3) continue;  // already a triangle
      Vertex s = fresh(fi, 0);
      for (int k = 0; k < len; ++k)
        insert_after(rot[walk[k]], walk[(k + len - 1) % len], s);
      rot[s].assign(walk.rbegin(), walk.rend());
      continue;
    }
    if (pendant_pos.size() != 3)
      throw FaceClassificationError(
          "face " + std::to_string(fi) + " has " +
          std::to_string(pendant_pos.size()) + " degree-1 vertices");

    // x_1 is the pendant with the smallest id; x_2, x_3 follow the walk.
    int first = 0;
    for (int k = 1; k < 3; ++k)
      if (walk[pendant_pos[k]] < walk[pendant_pos[first]]) first = k;
    std::array<int, 3> pos{};
    for (int k = 0; k < 3; ++k) pos[k] = pendant_pos[(first + k) % 3];
    std::array<Vertex, 3> x{}, s{};
    for (int k = 0; k < 3; ++k) x[k] = walk[pos[k]];
    for (int k = 0; k < 3; ++k) s[k] = fresh(fi, k + 1);

    for (int k = 0; k < 3; ++k) {
      const int prev = (k + 2) % 3;  // x_{k-1}
      std::vector<Vertex> corners;
      for (int p = (pos[prev] + 1) % len; p != pos[k]; p = (p + 1) % len) {
        corners.push_back(walk[p]);
        insert_after(rot[walk[p]], walk[(p + len - 1) % len], s[k]);
      }
      auto& rs = rot[s[k]];
      rs.push_back(x[k]);
      rs.insert(rs.end(), corners.rbegin(), corners.rend());
      rs.push_back(x[prev]);
      rs.push_back(s[prev]);
      rs.push_back(s[(k + 1) % 3]);
    }
    for (int k = 0; k < 3; ++k) {
      Vertex z = h.rotation(x[k]).at(0);
      rot[x[k]] = {z, s[k], s[(k + 1) % 3]};
    }
    g.reg.s_triangles.push_back(s);
  }

  g.graph = EmbeddedGraph(std::move(rot));
  if (!is_plane_triangulation(g.graph))
    throw EmbeddingInconsistent("step4: result is not a plane triangulation");
  return g;
}

Pipeline build_pipeline(const LabeledGraph& g0) {
  Pipeline p;
  p.g0 = g0;
  p.d = build_d(g0.graph.degree(g0.reg.g0_w));
  p.g1 = step2(p.g0, p.d);
  p.g2 = step3(p.g1);
  p.g = step4(p.g2);
  return p;
}

LabeledGraph build_full() { return build_pipeline(load_bundled_g0()).g; }

}  // namespace tritough
