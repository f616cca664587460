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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "tritough/construct.hpp"
#include "tritough/errors.hpp"
#include "tritough/faces.hpp"

using namespace tritough;

namespace {

const Pipeline& pipeline() {
  static const Pipeline p = build_pipeline(load_bundled_g0());
  return p;
}

nlohmann::json bundled() { return nlohmann::json::parse(bundled_g0_json()); }

void drop(std::vector<int>& v, int x) { v.erase(std::find(v.begin(), v.end(), x)); }

InvariantViolation violation(const nlohmann::json& doc) {
  try {
    load_g0(doc.dump());
  } catch (const InvariantViolation& e) {
    return e;
  }
  FAIL("no InvariantViolation");
  return InvariantViolation("", "", "");
}

bool is_cycle_in(const EmbeddedGraph& g, const std::vector<Vertex>& c) {
  std::set<Vertex> distinct(c.begin(), c.end());
  if (distinct.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (g.position(c[i], c[(i + 1) % c.size()]) < 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("G0 census") {
  G0Census c = census_g0(load_bundled_g0());
  CHECK(c == G0Census{63, 57, 121, 168, 49, 21});
  CHECK(c.p + c.q + 1 == c.n);
  CHECK(c.f == c.e - c.n + 2);
}

TEST_CASE("G0 validator rejects a deleted edge") {
  nlohmann::json doc = bundled();
  auto& rot = doc["rotation"];
  std::vector<int> r0 = rot["0"];
  const int x = r0[1];
  drop(r0, x);
  rot["0"] = r0;
  std::vector<int> rx = rot[std::to_string(x)];
  drop(rx, 0);
  rot[std::to_string(x)] = rx;
  InvariantViolation e = violation(doc);
  CHECK(e.name() == "e");
  CHECK(e.expected() == "168");
  CHECK(e.found() == "167");
}

TEST_CASE("G0 validator rejects an odd chord") {
  nlohmann::json doc = bundled();
  std::vector<int> cyc = doc["cycle"];
  const int a = cyc[0], b = cyc[2];
  auto& rot = doc["rotation"];
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    std::vector<int> r = rot[std::to_string(x)];
    r.push_back(y);
    rot[std::to_string(x)] = r;
  }
  CHECK(violation(doc).name() == "bipartite");
}

TEST_CASE("G0 validator rejects malformed input") {
  CHECK_THROWS_AS(load_g0("{"), ParseError);
  CHECK_THROWS_AS(load_g0("{}"), ParseError);
  nlohmann::json doc = bundled();
  doc["s_triangle_groups"].erase(0);
  CHECK(violation(doc).name() == "s_triangle_faces");
}

TEST_CASE("build_d") {
  CHECK_THROWS_AS(build_d(4), ParameterOutOfRange);
  LabeledGraph d5 = build_d(5);
  CHECK(d5.graph.num_vertices() == 20);
  CHECK(d5.graph.num_edges() == 52);
  for (int m : {5, 6, 12, 39}) {
    LabeledGraph d = build_d(m);
    CHECK(d.graph.num_edges() == 4 * m + 3 * m + 3 * m + (m - 3));
    CHECK(satisfies_euler(d.graph));
    int non_tri = 0, outer = 0;
    for (const FaceCycle& f : faces(d.graph))
      if (f.length() != 3) {
        ++non_tri;
        outer = f.length();
      }
    CHECK(non_tri == 1);
    CHECK(outer == m);
  }
  GraphCensus c = census(build_d(39));
  CHECK(c.n == 156);
  CHECK(c.e == 426);
  CHECK(c.f == 272);
}

TEST_CASE("stage counts") {
  const Pipeline& p = pipeline();
  CHECK(p.g1.graph.num_vertices() == 516);
  CHECK(p.g1.graph.num_edges() == 954);
  CHECK(p.g2.graph.num_vertices() == 747);
  CHECK(p.g.graph.num_vertices() == 838);
  CHECK(p.g.graph.num_edges() == 2508);
  for (const LabeledGraph* g : {&p.g0, &p.d, &p.g1, &p.g2, &p.g})
    CHECK(satisfies_euler(g->graph));
  CHECK(is_plane_triangulation(p.g.graph));
  GraphCensus c = census(p.g);
  CHECK(c.f == 1672);
  CHECK(c.classes[VertexClass::S] == 91);
  CHECK(c.classes[VertexClass::T1] == 63);
  CHECK(c.classes[VertexClass::T2] == 168);
  CHECK(c.classes[VertexClass::U_TRI] == 360);
  CHECK(c.classes[VertexClass::U_D] == 156);
}

TEST_CASE("C1 is a 172-cycle of G1") {
  const Pipeline& p = pipeline();
  CHECK(p.g1.reg.c1.size() == 172);
  CHECK(is_cycle_in(p.g1.graph, p.g1.reg.c1));
}

TEST_CASE("registries") {
  const LabeledGraph& g = pipeline().g;
  CHECK(g.reg.c3_triangles.size() == 120);
  CHECK(g.reg.s_triangles.size() == 21);
  for (const auto& t : g.reg.c3_triangles)
    for (int k = 0; k < 3; ++k) {
      CHECK(g.labels[t[k]].cls == VertexClass::U_TRI);
      CHECK(g.graph.position(t[k], t[(k + 1) % 3]) >= 0);
    }
  for (const auto& t : g.reg.s_triangles)
    for (int k = 0; k < 3; ++k) {
      CHECK(g.labels[t[k]].cls == VertexClass::S);
      CHECK(g.graph.position(t[k], t[(k + 1) % 3]) >= 0);
    }
}

TEST_CASE("spokes") {
  const LabeledGraph& g = pipeline().g;
  REQUIRE(g.reg.spokes.size() == 39);
  std::set<Vertex> a1(g.reg.rings[0].begin(), g.reg.rings[0].end());
  int long_spokes = 0;
  for (const Spoke& s : g.reg.spokes) {
    const auto& p = s.path;
    REQUIRE((p.size() == 6 || p.size() == 3));
    CHECK(a1.count(p[0]) == 1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      CHECK(g.graph.position(p[i], p[i + 1]) >= 0);
    CHECK(g.labels[p[1]].cls == VertexClass::T2);
    CHECK(g.labels[p.back()].cls == VertexClass::U_TRI);
    CHECK(g.labels[p.back()].j == 3);
    if (s.is_long()) {
      ++long_spokes;
      CHECK(g.labels[p[2]].j == 1);
      CHECK(g.labels[p[3]].j == 2);
      CHECK(g.labels[p[4]].cls == VertexClass::T2);
    }
  }
  CHECK(long_spokes == 34);
}

TEST_CASE("T degrees before and after step 4") {
  const Pipeline& p = pipeline();
  for (Vertex v = 0; v < p.g2.graph.num_vertices(); ++v) {
    if (p.g2.labels[v].cls == VertexClass::T2) CHECK(p.g2.graph.degree(v) == 2);
    if (p.g2.labels[v].cls == VertexClass::T1) CHECK(p.g2.graph.degree(v) == 1);
  }
  const LabeledGraph& g = p.g;
  const Graph abs = g.graph.abstract();
  for (Vertex v = 0; v < abs.num_vertices(); ++v) {
    VertexClass c = g.labels[v].cls;
    if (c != VertexClass::T1 && c != VertexClass::T2) continue;
    const auto& nb = abs.neighbors(v);
    Graph link = abs.induced(nb);
    if (c == VertexClass::T2) {
      REQUIRE(nb.size() == 4);
      CHECK(link.num_edges() == 4);
      for (Vertex x = 0; x < 4; ++x) CHECK(link.degree(x) == 2);
    } else {
      REQUIRE(nb.size() == 3);
      CHECK(link.num_edges() == 3);
    }
    for (Vertex x : nb) {
      VertexClass cx = g.labels[x].cls;
      CHECK(cx != VertexClass::T1);
      CHECK(cx != VertexClass::T2);
    }
  }
}

TEST_CASE("components of G - (S u T)") {
  const LabeledGraph& g = pipeline().g;
  ComponentGraph cg = component_graph(g);
  std::vector<int> sizes(cg.quotient.num_vertices(), 0);
  for (int c : cg.component_of)
    if (c >= 0) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes.size() == 121);
  CHECK(std::count(sizes.begin(), sizes.end(), 3) == 120);
  CHECK(sizes.back() == 156);
}

TEST_CASE("component graph round trip") {
  CHECK(component_graph_matches_g0(pipeline().g));
  CHECK(component_graph_matches_g0(pipeline().g2));
  ComponentGraph cg = component_graph(pipeline().g);
  std::vector<int> degs;
  for (Vertex v = 0; v < cg.quotient.num_vertices(); ++v)
    degs.push_back(cg.quotient.degree(v));
  std::vector<int> want;
  for (Vertex v = 0; v < 121; ++v) want.push_back(pipeline().g0.graph.degree(v));
  std::sort(degs.begin(), degs.end());
  std::sort(want.begin(), want.end());
  CHECK(degs == want);
}

TEST_CASE("component graph of a single triangle") {
  LabeledGraph lg;
  lg.graph = EmbeddedGraph({{1, 2, 3}, {2, 0, 4}, {0, 1, 5}, {0}, {1}, {2}});
  lg.labels = {{VertexClass::U_TRI, 1, 1}, {VertexClass::U_TRI, 1, 2},
               {VertexClass::U_TRI, 1, 3}, {VertexClass::T2, 0, 0},
               {VertexClass::T2, 1, 0},    {VertexClass::T2, 2, 0}};
  ComponentGraph cg = component_graph(lg);
  CHECK(cg.quotient.num_vertices() == 1);
  CHECK(cg.quotient.num_edges() == 0);
  CHECK(cg.t_degree == std::vector<int>{3});
  lg.labels.pop_back();
  CHECK_THROWS_AS(component_graph(lg), LabelsMissing);
}

TEST_CASE("vertex classes") {
  for (VertexClass c : {VertexClass::S, VertexClass::T1, VertexClass::T2,
                        VertexClass::U_TRI, VertexClass::U_D})
    CHECK(vertex_class_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(vertex_class_from_string("X"), ParseError);
}

}  // TEST_SUITE
