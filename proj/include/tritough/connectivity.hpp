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

#ifndef TRITOUGH_CONNECTIVITY_HPP_
#define TRITOUGH_CONNECTIVITY_HPP_

#include "tritough/graph.hpp"

namespace tritough {

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

// Minimum vertex cut size; n-1 for complete graphs, 0 if disconnected.
int vertex_connectivity(const Graph& g);
int vertex_connectivity(const EmbeddedGraph& g);

// E(g) plus every pair at distance two.
Graph square(const Graph& g);
Graph square(const EmbeddedGraph& g);

}  // namespace tritough

#endif  // TRITOUGH_CONNECTIVITY_HPP_
