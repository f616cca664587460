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

#ifndef TRITOUGH_FACES_HPP_
#define TRITOUGH_FACES_HPP_

#include <map>
#include <vector>

#include "tritough/graph.hpp"

namespace tritough {

// Boundary walk of one face. Dart k leaves corner vertex darts[k].from; the
// face lies to the right of each dart when the rotation is clockwise.
struct FaceCycle {
  std::vector<Dart> darts;

  int length() const { return static_cast<int>(darts.size()); }
  // Vertices visited in walk order (a vertex may repeat).
  std::vector<Vertex> vertices() const;
};

// The successor dart of (a, v) is (v, successor(v, a)).
Dart next_dart(const EmbeddedGraph& g, Dart d);

struct FaceTrace {
  std::vector<FaceCycle> faces;
  // Face index of each dart.
  std::map<Dart, int> face_of;
  // Set when g has isolated vertices or more than one component; the walks
  // are then per component and Euler's formula does not apply globally.
  bool degenerate = false;
};

FaceTrace trace_faces(const EmbeddedGraph& g);
std::vector<FaceCycle> faces(const EmbeddedGraph& g);

// n - e + f == 2 for a connected graph.
bool satisfies_euler(const EmbeddedGraph& g);

bool is_plane_triangulation(const EmbeddedGraph& g);

}  // namespace tritough

#endif  // TRITOUGH_FACES_HPP_
