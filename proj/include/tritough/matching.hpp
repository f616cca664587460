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

#ifndef TRITOUGH_MATCHING_HPP_
#define TRITOUGH_MATCHING_HPP_

#include <vector>

#include "tritough/graph.hpp"

namespace tritough {

struct MatchingResult {
  std::vector<Edge> pairs;  // sorted
  int size = 0;
  std::vector<Vertex> mate;  // -1 when unmatched
};

// Maximum cardinality matching, Edmonds' blossom algorithm.
MatchingResult max_matching(const Graph& g);
MatchingResult max_matching(const EmbeddedGraph& g);

// True iff `pairs` are edges of g and pairwise vertex-disjoint.
bool is_matching(const Graph& g, const std::vector<Edge>& pairs);

}  // namespace tritough

#endif  // TRITOUGH_MATCHING_HPP_
