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

#include "tritough/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tritough {
namespace {

// Unit-capacity flow network on the split digraph: v_in = 2v, v_out = 2v+1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.num_vertices(), -1) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      add_arc(2 * v, 2 * v + 1);
      for (Vertex w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w);
    }
  }

  int max_flow(int s, int t, int limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    int total = 0;
    std::vector<int> via(head_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -2);
      via[s] = -1;
      std::deque<int> queue{s};
      while (!queue.empty() && via[t] == -2) {
        int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          int y = to_[a];
          if (via[y] != -2 || flow_[a] >= cap_[a]) continue;
          via[y] = a;
          queue.push_back(y);
        }
      }
      if (via[t] == -2) break;
      for (int x = t; x != s;) {
        int a = via[x];
        ++flow_[a];
        --flow_[a ^ 1];
        x = to_[a ^ 1];
      }
      ++total;
    }
    return total;
  }

 private:
  void add_arc(int a, int b) {
    push(a, b, 1);
    push(b, a, 0);
  }
  void push(int a, int b, int cap) {
    to_.push_back(b);
    cap_.push_back(cap);
    flow_.push_back(0);
    next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, next_, to_, cap_, flow_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s == t || g.has_edge(s, t))
    throw std::invalid_argument("endpoints must be distinct and non-adjacent");
  SplitNetwork net(g);
  return net.max_flow(2 * s + 1, 2 * t, g.num_vertices());
}

int vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  SplitNetwork net(g);
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
    }
  return best;
}

int vertex_connectivity(const EmbeddedGraph& g) {
  return vertex_connectivity(g.abstract());
}

Graph square(const Graph& g) {
  Graph h = g;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Vertex a : g.neighbors(v))
      for (Vertex b : g.neighbors(v))
        if (a < b && !h.has_edge(a, b)) h.add_edge(a, b);
  return h;
}

Graph square(const EmbeddedGraph& g) { return square(g.abstract()); }

}  // namespace tritough
