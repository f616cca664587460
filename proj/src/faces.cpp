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

#include "tritough/faces.hpp"

#include "tritough/errors.hpp"

namespace tritough {

std::vector<Vertex> FaceCycle::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.from);
  return out;
}

Dart next_dart(const EmbeddedGraph& g, Dart d) {
  return Dart{d.to, g.successor(d.to, d.from)};
}

FaceTrace trace_faces(const EmbeddedGraph& g) {
  FaceTrace out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.rotation(v)) {
      Dart start{v, w};
      if (out.face_of.count(start)) continue;
      const int id = static_cast<int>(out.faces.size());
      FaceCycle face;
      Dart d = start;
      do {
        if (!out.face_of.emplace(d, id).second)
          throw EmbeddingInconsistent("dart traced twice");
        face.darts.push_back(d);
        d = next_dart(g, d);
      } while (d != start);
      out.faces.push_back(std::move(face));
    }
  }
  Graph abs = g.abstract();
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0 && g.num_vertices() > 1) out.degenerate = true;
  if (connected_components(abs).count > 1) out.degenerate = true;
  return out;
}

std::vector<FaceCycle> faces(const EmbeddedGraph& g) {
  return trace_faces(g).faces;
}

bool satisfies_euler(const EmbeddedGraph& g) {
  FaceTrace t = trace_faces(g);
  if (t.degenerate) return false;
  const long f = static_cast<long>(t.faces.size());
  return g.num_vertices() - g.num_edges() + f == 2;
}

bool is_plane_triangulation(const EmbeddedGraph& g) {
  if (g.num_vertices() < 3) return false;
  FaceTrace t = trace_faces(g);
  if (t.degenerate) return false;
  for (const FaceCycle& f : t.faces)
    if (f.length() != 3) return false;
  return g.num_vertices() - g.num_edges() +
             static_cast<int>(t.faces.size()) ==
         2;
}

}  // namespace tritough
