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

#include "tritough/matching.hpp"

#include <algorithm>
#include <deque>

namespace tritough {
namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, 0),
        in_blossom_(n_, 0),
        lca_mark_(n_, 0) {}

  std::vector<Vertex> run() {
    // Greedy start.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex end = find_path(root);
      if (end == -1) continue;
      augment(end);
    }
    return mate_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    for (Vertex v : touched_) {
      used_[v] = 0;
      parent_[v] = -1;
      base_[v] = v;
    }
    touched_.clear();
    if (first_) {
      for (Vertex v = 0; v < n_; ++v) base_[v] = v;
      first_ = false;
    }
    auto touch = [&](Vertex v) {
      if (!used_[v] && parent_[v] == -1) touched_.push_back(v);
    };
    touch(root);
    used_[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          Vertex cur = lca(v, to);
          for (Vertex x : touched_) in_blossom_[x] = 0;
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex x : touched_) {
            if (in_blossom_[base_[x]]) {
              base_[x] = cur;
              if (!used_[x]) {
                used_[x] = 1;
                queue.push_back(x);
              }
            }
          }
        } else if (parent_[to] == -1) {
          touch(to);
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          Vertex m = mate_[to];
          touch(m);
          used_[m] = 1;
          queue.push_back(m);
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v != -1) {
      Vertex pv = parent_[v];
      Vertex ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
  std::vector<int> lca_mark_;
  std::vector<Vertex> touched_;
  int stamp_ = 0;
  bool first_ = true;
};

}  // namespace

MatchingResult max_matching(const Graph& g) {
  MatchingResult out;
  out.mate = Blossom(g).run();
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (out.mate[v] > v) out.pairs.emplace_back(v, out.mate[v]);
  out.size = static_cast<int>(out.pairs.size());
  return out;
}

MatchingResult max_matching(const EmbeddedGraph& g) {
  return max_matching(g.abstract());
}

bool is_matching(const Graph& g, const std::vector<Edge>& pairs) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (const Edge& e : pairs) {
    if (e.u < 0 || e.v >= g.num_vertices() || !g.has_edge(e.u, e.v))
      return false;
    if (seen[e.u] || seen[e.v]) return false;
    seen[e.u] = seen[e.v] = 1;
  }
  return true;
}

}  // namespace tritough
