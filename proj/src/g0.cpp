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
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tritough/construct.hpp"
#include "tritough/errors.hpp"
#include "tritough/faces.hpp"

namespace tritough {

extern const char kBundledG0Json[];

namespace {

using nlohmann::json;

constexpr int kN = 121;
constexpr int kE = 168;
constexpr int kF = 49;
constexpr int kCycle = 86;
constexpr int kU = 34;
constexpr int kDegW = 39;
constexpr int kP = 63;
constexpr int kQ = 57;
constexpr int kGirth = 8;
constexpr int kFs = 21;

void expect_eq(const char* name, long expected, long found) {
  if (expected != found)
    throw InvariantViolation(name, std::to_string(expected),
                             std::to_string(found));
}

struct RawG0 {
  std::vector<std::vector<Vertex>> rotation;
  Vertex w = -1;
  std::vector<Vertex> cycle, u;
  std::vector<std::array<Vertex, 3>> groups;
  std::map<Vertex, std::string> names, colors;
};

RawG0 parse(std::string_view text) {
  RawG0 raw;
  try {
    json doc = json::parse(text);
    if (doc.value("orientation", "clockwise") != "clockwise")
      throw ParseError("only clockwise rotations are supported");
    const json& rot = doc.at("rotation");
    const int n = static_cast<int>(rot.size());
    raw.rotation.resize(n);
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      std::size_t used = 0;
      int id = std::stoi(it.key(), &used);
      if (used != it.key().size() || id < 0 || id >= n)
        throw ParseError("rotation keys must be the dense ids 0..n-1");
      raw.rotation[id] = it.value().get<std::vector<Vertex>>();
    }
    raw.w = doc.at("w").get<Vertex>();
    raw.cycle = doc.at("cycle").get<std::vector<Vertex>>();
    raw.u = doc.at("u").get<std::vector<Vertex>>();
    for (const json& g : doc.at("s_triangle_groups")) {
      auto ids = g.get<std::vector<Vertex>>();
      if (ids.size() != 3) throw ParseError("a group must list 3 vertices");
      raw.groups.push_back({ids[0], ids[1], ids[2]});
    }
    if (doc.contains("vertices")) {
      for (const json& v : doc.at("vertices")) {
        Vertex id = v.at("id").get<Vertex>();
        if (v.contains("name")) raw.names[id] = v["name"].get<std::string>();
        if (v.contains("color")) raw.colors[id] = v["color"].get<std::string>();
      }
    }
    auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
    if (!in_range(raw.w)) throw ParseError("w out of range");
    for (Vertex x : raw.cycle)
      if (!in_range(x)) throw ParseError("cycle vertex out of range");
    for (Vertex x : raw.u)
      if (!in_range(x)) throw ParseError("u vertex out of range");
    for (const auto& g : raw.groups)
      for (Vertex x : g)
        if (!in_range(x)) throw ParseError("group vertex out of range");
  } catch (const json::exception& e) {
    throw ParseError(std::string("G0 file: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("G0 file: non-numeric rotation key");
  }
  return raw;
}

bool face_has(const FaceCycle& f, Vertex x) {
  for (const Dart& d : f.darts)
    if (d.from == x) return true;
  return false;
}

void check_c0(const EmbeddedGraph& g, const FaceTrace& t, Vertex w,
              const std::vector<Vertex>& cycle) {
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size() || distinct.count(w))
    throw InvariantViolation("c0_face_cycle", "86 distinct vertices other than w",
                             "repeated vertex or w");
  const int len = static_cast<int>(cycle.size());
  for (int i = 0; i < len; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % len];
    if (g.position(a, b) < 0)
      throw InvariantViolation("c0_face_cycle", "edge", "non-adjacent pair " +
                                                            std::to_string(a) +
                                                            "," +
                                                            std::to_string(b));
    bool fwd = face_has(t.faces[t.face_of.at(Dart{a, b})], w);
    bool rev = face_has(t.faces[t.face_of.at(Dart{b, a})], w);
    if (fwd || !rev)
      throw InvariantViolation(
          "c0_face_cycle", "w-side face traced by v_{i+1} -> v_i",
          "wrong side at " + std::to_string(a) + "->" + std::to_string(b));
  }
}

void check_groups(const EmbeddedGraph& g, const FaceTrace& t,
                  const std::vector<std::array<Vertex, 3>>& groups) {
  expect_eq("s_triangle_faces", kFs, static_cast<long>(groups.size()));
  std::map<Vertex, int> owner;
  std::set<int> used_faces;
  for (const auto& grp : groups) {
    for (Vertex x : grp) {
      if (g.degree(x) != 2)
        throw InvariantViolation("s_triangle_faces", "degree-2 group member",
                                 "vertex " + std::to_string(x) + " of degree " +
                                     std::to_string(g.degree(x)));
      if (!owner.emplace(x, 1).second)
        throw InvariantViolation("s_triangle_faces", "disjoint groups",
                                 "vertex " + std::to_string(x) + " repeated");
    }
    int hits = 0, face = -1;
    for (int k = 0; k < static_cast<int>(t.faces.size()); ++k) {
      const FaceCycle& f = t.faces[k];
      if (face_has(f, grp[0]) && face_has(f, grp[1]) && face_has(f, grp[2])) {
        ++hits;
        face = k;
      }
    }
    if (hits != 1)
      throw InvariantViolation("s_triangle_faces", "one face per group",
                               std::to_string(hits) + " faces");
    if (!used_faces.insert(face).second)
      throw InvariantViolation("s_triangle_faces", "distinct faces",
                               "two groups share a face");
  }
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    if (g.degree(x) == 2 && !owner.count(x))
      throw InvariantViolation("s_triangle_faces", "every degree-2 vertex grouped",
                               "vertex " + std::to_string(x) + " ungrouped");
}

}  // namespace

std::string_view bundled_g0_json() { return kBundledG0Json; }

LabeledGraph load_g0(std::string_view json_text) {
  RawG0 raw = parse(json_text);
  EmbeddedGraph g(std::move(raw.rotation));
  const int n = g.num_vertices();
  expect_eq("n", kN, n);
  expect_eq("cycle_length", kCycle, static_cast<long>(raw.cycle.size()));
  expect_eq("u_count", kU, static_cast<long>(raw.u.size()));
  Graph abs = g.abstract();
  if (!is_bipartite(abs))
    throw InvariantViolation("bipartite", "true", "false");
  expect_eq("e", kE, g.num_edges());
  FaceTrace t = trace_faces(g);
  if (t.degenerate) throw InvariantViolation("f", "connected", "disconnected");
  expect_eq("f", kF, static_cast<long>(t.faces.size()));
  expect_eq("euler", 2, n - g.num_edges() + static_cast<long>(t.faces.size()));
  expect_eq("deg_w", kDegW, g.degree(raw.w));
  int p = 0, q = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (x == raw.w) continue;
    if (g.degree(x) == 2) ++p;
    if (g.degree(x) == 3) ++q;
  }
  expect_eq("degree_2", kP, p);
  expect_eq("degree_3", kQ, q);
  Graph no_w = abs;
  for (Vertex x : std::vector<Vertex>(abs.neighbors(raw.w)))
    no_w.remove_edge(raw.w, x);
  int gi = girth(no_w);
  if (gi != 0 && gi < kGirth)
    throw InvariantViolation("girth", ">= 8", std::to_string(gi));
  check_c0(g, t, raw.w, raw.cycle);
  for (Vertex x : raw.u)
    if (g.degree(x) != 2 || g.position(x, raw.w) < 0)
      throw InvariantViolation("u_count", "u_i of degree 2 adjacent to w",
                               "vertex " + std::to_string(x));
  check_groups(g, t, raw.groups);

  LabeledGraph out;
  out.graph = std::move(g);
  out.labels.resize(n);
  for (Vertex x = 0; x < n; ++x)
    out.labels[x] = x == raw.w ? VertexLabel{VertexClass::U_D, 0, 0}
                               : VertexLabel{VertexClass::U_TRI, x, 0};
  out.reg.c0 = raw.cycle;
  out.reg.g0_u = raw.u;
  out.reg.g0_w = raw.w;
  out.reg.g0_n = n;
  out.reg.g0_edges = abs.edges();
  out.reg.s_triangle_groups = raw.groups;
  out.reg.names = std::move(raw.names);
  out.reg.colors = std::move(raw.colors);
  return out;
}

LabeledGraph load_g0_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_g0(buf.str());
}

LabeledGraph load_bundled_g0() { return load_g0(bundled_g0_json()); }

G0Census census_g0(const LabeledGraph& g0) {
  const EmbeddedGraph& g = g0.graph;
  G0Census c;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (x == g0.reg.g0_w) continue;
    if (g.degree(x) == 2) ++c.p;
    if (g.degree(x) == 3) ++c.q;
  }
  c.n = g.num_vertices();
  c.e = g.num_edges();
  c.f = static_cast<int>(faces(g).size());
  c.f_s = static_cast<int>(g0.reg.s_triangle_groups.size());
  return c;
}

Graph g0_minus_w(const LabeledGraph& g0) {
  Graph g = g0.graph.abstract();
  const Vertex w = g0.reg.g0_w;
  for (Vertex x : std::vector<Vertex>(g.neighbors(w))) g.remove_edge(w, x);
  return g;
}

}  // namespace tritough
