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

#include <random>

#include "support.hpp"
#include "tritough/connectivity.hpp"
#include "tritough/construct.hpp"
#include "tritough/errors.hpp"
#include "tritough/matching.hpp"
#include "tritough/toughness.hpp"

using namespace tritough;
using namespace tritough::testing;

namespace {

const LabeledGraph& full() {
  static const LabeledGraph g = build_full();
  return g;
}

SearchResult run_search(const Graph& g, std::int64_t budget, std::uint64_t seed,
                        int workers = 1) {
  SearchOptions o;
  o.budget = budget;
  o.seed = seed;
  o.workers = workers;
  return search_cuts(g, o);
}

}  // namespace

TEST_SUITE("toughness") {

TEST_CASE("cut_score") {
  CutScore s = cut_score(cycle_graph(6), {0, 3});
  CHECK(s.ratio == Rational(1));
  CHECK(s.h == Rational(1));
  CHECK_THROWS_AS(cut_score(cycle_graph(6), {}), NotACutset);
  CHECK_THROWS_AS(cut_score(cycle_graph(6), {0, 1, 2, 3, 4, 5}), NotACutset);
  CHECK(to_string(Rational(413, 275)) == "413/275");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(2)) == "2");
}

TEST_CASE("exact toughness of named graphs") {
  for (int n = 4; n <= 12; ++n) {
    ToughnessReport r = toughness_exact(cycle_graph(n));
    CHECK_FALSE(r.infinite);
    CHECK(r.value == Rational(1));
  }
  CHECK(toughness_exact(cycle_graph(5)).value == Rational(1));
  for (int n = 1; n <= 6; ++n) {
    ToughnessReport r = toughness_exact(complete_graph(n));
    CHECK(r.infinite);
    CHECK_FALSE(r.witness.has_value());
  }
  ToughnessReport p = toughness_exact(petersen());
  CHECK(p.value == Rational(4, 3));
  CHECK(toughness_by_size(petersen()).value == Rational(4, 3));
  CHECK_THROWS_AS(toughness_exact(cycle_graph(21)), TooLarge);
  CHECK_THROWS_AS(toughness_by_size(cycle_graph(17)), TooLarge);
}

TEST_CASE("two exact oracles agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    Graph g = random_graph(rng, n, std::uniform_real_distribution<>(0.2, 0.9)(rng));
    ToughnessReport a = toughness_exact(g);
    ToughnessReport b = toughness_by_size(g);
    REQUIRE(a.infinite == b.infinite);
    if (a.infinite) continue;
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    const Cut& w = *a.witness;
    CHECK(count_components_without(g, w.W) == w.components);
    CHECK(cut_score(g, w.W).ratio == a.value);
  }
}

TEST_CASE("square toughness is at least connectivity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 10)(rng);
    Graph g = random_connected_graph(rng, n,
                                     std::uniform_real_distribution<>(0.0, 0.4)(rng));
    ToughnessReport t = toughness_exact(square(g));
    if (!t.infinite) CHECK(t.value >= Rational(vertex_connectivity(g)));
  }
}

TEST_CASE("square relation") {
  Graph c5 = cycle_graph(5);
  CHECK_FALSE(verify_square_relation(c5, {0, 1, 2, 3, 4}));
  CHECK(verify_square_relation(square(cycle_graph(6)), {0, 1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(verify_square_relation(c5, {0, 1, 2, 3}), NotAPermutation);
  CHECK_THROWS_AS(verify_square_relation(c5, {0, 1, 2, 3, 3}), NotAPermutation);
}

TEST_CASE("D certificates") {
  const LabeledGraph d = build_d(39);
  VerificationReport r = d_two_tough_evidence(d);
  CHECK(r.overall());
  CHECK(r.checks.size() == 5);

  std::vector<Vertex> keep(d.reg.rings[0]);
  keep.insert(keep.end(), d.reg.rings[1].begin(), d.reg.rings[1].end());
  Graph d1 = d.graph.abstract().induced(keep);
  std::map<Vertex, Vertex> index;
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) index[keep[k]] = k;
  std::vector<Vertex> q;
  for (Vertex v : square_root_cycle(d)) q.push_back(index.at(v));
  CHECK(q.size() == 78);
  CHECK(verify_square_relation(d1, q));
  d1.remove_edge(q[0], q[1]);
  CHECK_FALSE(verify_square_relation(d1, q));

  CHECK(recorded_d_toughness(5) == toughness_exact(build_d(5).graph.abstract(), 24).value);
  CHECK_THROWS_AS(recorded_d_toughness(7), ParameterOutOfRange);
}

TEST_CASE("canonical cut closed forms") {
  const LabeledGraph& g = full();
  const Graph abs = g.graph.abstract();
  MatchingResult m = max_matching(g0_minus_w(load_bundled_g0()));
  REQUIRE(m.size == 43);
  for (int k = 0; k <= 43; ++k) {
    std::vector<Edge> pairs(m.pairs.begin(), m.pairs.begin() + k);
    Cut cut = canonical_cut(g, pairs);
    CHECK(static_cast<int>(cut.W.size()) == 370 + k);
    CHECK(cut.components == 232 + k);
    CHECK(count_components_without(abs, cut.W) == cut.components);
    CutScore s = cut_score(abs, cut.W);
    CHECK(s.h == Rational(-44 + k, 2));
    if (k == 43) CHECK(s.ratio == Rational(413, 275));
  }
}

TEST_CASE("canonical cut input errors") {
  const LabeledGraph& g = full();
  CHECK_THROWS_AS(canonical_cut(build_d(39), {}), LabelsMissing);
  CHECK_THROWS_AS(canonical_cut(g, {Edge(1, 3)}), MatchingInvalid);
  MatchingResult m = max_matching(g0_minus_w(load_bundled_g0()));
  Edge a = m.pairs[0];
  Edge b(-1, -1);
  for (const Edge& e : g.reg.g0_edges)
    if (e != a && (e.u == a.u || e.v == a.u) && e.u != g.reg.g0_w) b = e;
  REQUIRE(b.u >= 0);
  CHECK_THROWS_AS(canonical_cut(g, {a, b}), MatchingInvalid);
}

TEST_CASE("search on small graphs") {
  CHECK(run_search(cycle_graph(6), 2000, 1).score.ratio == Rational(1));
  SearchResult p = run_search(petersen(), 10000, 1);
  CHECK(p.found);
  CHECK(p.score.ratio == Rational(4, 3));
  CHECK(count_components_without(petersen(), p.cut.W) == p.cut.components);
  CHECK_FALSE(run_search(complete_graph(5), 1000, 1).found);
}

TEST_CASE("search never beats the exact value") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 12)(rng);
    Graph g = random_graph(rng, n, std::uniform_real_distribution<>(0.2, 0.8)(rng));
    ToughnessReport t = toughness_exact(g);
    SearchResult s = run_search(g, 3000, trial);
    REQUIRE(s.found == !t.infinite);
    if (!s.found) continue;
    CHECK(s.score.ratio >= t.value);
    CHECK(s.score.h.denominator() <= 2);
    CHECK(cut_score(g, s.cut.W).ratio == s.score.ratio);
  }
}

TEST_CASE("search is deterministic across worker counts") {
  const Graph g = petersen();
  SearchResult a = run_search(g, 5000, 9, 1);
  SearchResult b = run_search(g, 5000, 9, 1);
  SearchResult c = run_search(g, 5000, 9, 4);
  CHECK(a.cut == b.cut);
  CHECK(a.cut == c.cut);
  CHECK(a.evaluations == c.evaluations);
}

TEST_CASE("search on the construction stays at or above 3/2") {
  SearchOptions o = construction_hints(full());
  o.budget = 20000;
  o.seed = 1;
  SearchResult r = search_cuts(full().graph.abstract(), o);
  CHECK(r.found);
  CHECK(r.score.ratio >= Rational(3, 2));
}

}  // TEST_SUITE
