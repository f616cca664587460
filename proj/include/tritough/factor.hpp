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

#ifndef TRITOUGH_FACTOR_HPP_
#define TRITOUGH_FACTOR_HPP_

#include <map>
#include <vector>

#include "tritough/construct.hpp"
#include "tritough/graph.hpp"
#include "tritough/report.hpp"

namespace tritough {

// Components of g - (S u T) tallied by e_G(D, T).
struct OddComponentCensus {
  std::map<int, int> counts;  // odd e_G(D,T) -> number of components
  int even_components = 0;

  int odd_components() const;
  friend bool operator==(const OddComponentCensus&,
                         const OddComponentCensus&) = default;
};

// Throws OverlappingSets if S and T meet; std::out_of_range on bad ids.
OddComponentCensus odd_component_census(const Graph& g,
                                        const std::vector<Vertex>& S,
                                        const std::vector<Vertex>& T);

// 2|S| + sum_{y in T} d_{G-S}(y) - 2|T| - c(S,T).
int delta(const Graph& g, const std::vector<Vertex>& S,
          const std::vector<Vertex>& T);

bool is_barrier(const Graph& g, const std::vector<Vertex>& S,
                const std::vector<Vertex>& T);

struct Barrier {
  std::vector<Vertex> S, T;
  int delta = 0;
  OddComponentCensus census;
};
Barrier make_barrier(const Graph& g, std::vector<Vertex> S,
                     std::vector<Vertex> T);

// f-factor gadget for f = 2. For each vertex v: d(v) external nodes, one per
// incident edge, then d(v) - 2 internal nodes joined to all externals of v.
// Each edge uv of g joins the matching externals of u and v.
struct TutteGadget {
  Graph graph;
  std::vector<Edge> edge_of;  // external node -> edge of g; internal: (-1,-1)
  std::vector<Vertex> owner;  // gadget node -> vertex of g
};

// Throws DegreeTooSmall if some vertex has degree < 2.
TutteGadget tutte_gadget(const Graph& g);

struct TwoFactorResult {
  bool feasible = false;
  std::vector<Edge> factor;  // when feasible: sorted, 2-regular, spanning
  int deficiency = 0;        // when infeasible: unmatched gadget nodes, or
                             // sum of (2 - d(v)) over vertices of degree < 2
};

TwoFactorResult has_two_factor(const Graph& g);

// Every vertex of degree 2 in `factor`, all edges in g.
bool is_two_factor(const Graph& g, const std::vector<Edge>& factor);

// Checks on the labelled construction with S = S-vertices, T = T1 u T2.
VerificationReport verify_construction_barrier(const LabeledGraph& g);

}  // namespace tritough

#endif  // TRITOUGH_FACTOR_HPP_
