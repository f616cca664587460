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

#ifndef TRITOUGH_TOUGHNESS_HPP_
#define TRITOUGH_TOUGHNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tritough/construct.hpp"
#include "tritough/graph.hpp"
#include "tritough/report.hpp"

namespace tritough {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

struct Cut {
  std::vector<Vertex> W;  // sorted
  int components = 0;     // c(G - W)
  friend bool operator==(const Cut&, const Cut&) = default;
};

struct CutScore {
  Rational ratio;  // |W| / c(G - W)
  Rational h;      // (3/2) c(G - W) - |W|
};

int count_components_without(const Graph& g, const std::vector<Vertex>& W);

// Throws NotACutset when c(G - W) <= 1.
CutScore cut_score(const Graph& g, const std::vector<Vertex>& W);

struct ToughnessReport {
  bool infinite = false;     // g is complete
  Rational value;
  std::optional<Cut> witness;  // lexicographically smallest minimiser
};

// Enumerates every vertex subset. Throws TooLarge when n > bound (bound <= 30).
ToughnessReport toughness_exact(const Graph& g, int bound = 20);
// Independent oracle: subsets by increasing |W|, stopping once
// |W| / (n - |W|) reaches the best ratio found.
ToughnessReport toughness_by_size(const Graph& g, int bound = 16);

// W* = S u V(A_1) u two vertices of every C3-triangle u T*. For a matched G0
// vertex the two non-representative triangle vertices are taken; otherwise
// v_{.,2} and v_{.,3}. T* holds the T2 vertex of every matched edge.
// `pairs` are edges of G0 - w in G0 ids. Throws MatchingInvalid, LabelsMissing.
Cut canonical_cut(const LabeledGraph& g, const std::vector<Edge>& pairs);

struct SearchOptions {
  std::int64_t budget = 100000;  // evaluated candidate sets, all chains
  std::uint64_t seed = 1;
  int workers = 0;               // 0: read TRITOUGH_WORKERS, default 1
  std::vector<std::vector<Vertex>> seed_cuts;
  std::vector<std::vector<Vertex>> groups;  // blocks toggled as one move
};

struct SearchResult {
  Cut cut;
  CutScore score;
  std::int64_t evaluations = 0;
  bool found = false;  // false when no cutset exists (complete graph)
};

// Deterministic in (g, budget, seed, seed_cuts, groups); the worker count
// does not change the result.
SearchResult search_cuts(const Graph& g, const SearchOptions& options);

// Seed cuts and groups for the full construction: canonical cuts, S-triangles,
// C3-triangles, spokes, face S-vertices with their T neighbours.
SearchOptions construction_hints(const LabeledGraph& g);

// True iff E(g) is exactly the cycle edges plus pairs at distance 2 along it.
// Throws NotAPermutation if `cycle` is not a permutation of V(g).
bool verify_square_relation(const Graph& g, const std::vector<Vertex>& cycle);

// Q = a_{1,1} a_{2,2} a_{1,2} a_{2,3} ... a_{1,m} a_{2,1}.
std::vector<Vertex> square_root_cycle(const LabeledGraph& d);

// Exhaustive toughness of D(5) and D(6), fixed after first computation.
Rational recorded_d_toughness(int m);

// Square relation for D_1, spanning embedding of D_1 into D_2, and the
// recorded brute-force toughness of D(5), D(6) when include_small is set.
VerificationReport d_two_tough_evidence(const LabeledGraph& d,
                                        bool include_small = true);

}  // namespace tritough

#endif  // TRITOUGH_TOUGHNESS_HPP_
