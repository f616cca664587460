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

#include <map>
#include <random>
#include <set>

#include "support.hpp"
#include "tritough/connectivity.hpp"
#include "tritough/construct.hpp"
#include "tritough/errors.hpp"
#include "tritough/faces.hpp"
#include "tritough/matching.hpp"

using namespace tritough;
using namespace tritough::testing;

TEST_SUITE("graphcore") {

TEST_CASE("graph rejects loops and parallel edges") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.remove_edge(0, 1));
}

TEST_CASE("embedding validation") {
  CHECK_THROWS_AS(EmbeddedGraph({{1}, {}}), EmbeddingInconsistent);
  CHECK_THROWS_AS(EmbeddedGraph(std::vector<std::vector<Vertex>>{{0}}),
                  EmbeddingInconsistent);
  CHECK_THROWS_AS(EmbeddedGraph({{1, 1}, {0, 0}}), EmbeddingInconsistent);
}

TEST_CASE("K4 faces") {
  EmbeddedGraph k4 = k4_embedding();
  CHECK(faces(k4).size() == 4);
  CHECK(satisfies_euler(k4));
  CHECK(is_plane_triangulation(k4));
}

TEST_CASE("cycle faces") {
  for (int n = 3; n <= 9; ++n) {
    auto f = faces(cycle_embedding(n));
    REQUIRE(f.size() == 2);
    CHECK(f[0].length() == n);
    CHECK(f[1].length() == n);
  }
  CHECK_FALSE(is_plane_triangulation(cycle_embedding(5)));
  CHECK(is_plane_triangulation(cycle_embedding(3)));
}

TEST_CASE("icosahedron is a triangulation") {
  EmbeddedGraph g = icosahedron();
  CHECK(g.num_edges() == 30);
  CHECK(faces(g).size() == 20);
  CHECK(is_plane_triangulation(g));
}

TEST_CASE("every dart lies on exactly one face") {
  for (const EmbeddedGraph& g :
       {k4_embedding(), icosahedron(), load_bundled_g0().graph,
        build_d(39).graph}) {
    std::map<Dart, int> seen;
    for (const FaceCycle& f : faces(g))
      for (const Dart& d : f.darts) ++seen[d];
    CHECK(static_cast<int>(seen.size()) == 2 * g.num_edges());
    for (const auto& [d, k] : seen) CHECK(k == 1);
  }
}

TEST_CASE("face counts of G0 and D") {
  const LabeledGraph g0 = load_bundled_g0();
  CHECK(faces(g0.graph).size() == 49);
  CHECK_FALSE(is_plane_triangulation(g0.graph));

  const LabeledGraph d = build_d(39);
  auto f = faces(d.graph);
  CHECK(f.size() == 272);
  int tri = 0, big = 0;
  for (const FaceCycle& c : f) (c.length() == 3 ? tri : big) += 1;
  CHECK(tri == 271);
  CHECK(big == 1);
  CHECK(3 * tri + 39 == 2 * d.graph.num_edges());
}

TEST_CASE("degenerate trace") {
  EmbeddedGraph g({{1}, {0}, {}});
  CHECK(trace_faces(g).degenerate);
  CHECK_FALSE(is_plane_triangulation(g));
}

TEST_CASE("matching small cases") {
  CHECK(max_matching(cycle_graph(5)).size == 2);
  CHECK(max_matching(petersen()).size == 5);
  CHECK(max_matching(Graph(4)).size == 0);
  CHECK(max_matching(g0_minus_w(load_bundled_g0())).size == 43);
}

TEST_CASE("blossom equals exhaustive optimum on random graphs") {
  std::mt19937_64 rng(20261016);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    Graph g = random_graph(rng, n, p);
    MatchingResult m = max_matching(g);
    CHECK(is_matching(g, m.pairs));
    CHECK(static_cast<int>(m.pairs.size()) == m.size);
    if (m.size != brute_matching(g)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(cycle_graph(6)) == 2);
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  CHECK(vertex_connectivity(cycle_graph(78)) == 2);
  CHECK(vertex_connectivity(petersen()) == 3);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK(vertex_connectivity(two) == 0);
}

TEST_CASE("vertex connectivity against subset enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    Graph g = random_graph(rng, n, p);
    int k = vertex_connectivity(g);
    CHECK(k == brute_connectivity(g));
    int min_deg = n;
    for (Vertex v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
    CHECK(k <= min_deg);
  }
}

TEST_CASE("square") {
  Graph p3 = square(path_graph(3));
  CHECK(p3 == complete_graph(3));
  Graph c6 = square(cycle_graph(6));
  CHECK(c6.num_edges() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 4);
}

}  // TEST_SUITE
