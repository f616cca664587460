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

#include "tritough/toughness.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "tritough/connectivity.hpp"
#include "tritough/errors.hpp"

namespace tritough {
namespace {

bool is_complete(const Graph& g) {
  const long n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

int components_mask(const std::vector<std::uint64_t>& adj,
                    std::uint64_t alive) {
  int c = 0;
  while (alive) {
    std::uint64_t comp = alive & (~alive + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = adj[v] & alive & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    alive &= ~comp;
    ++c;
  }
  return c;
}

// Lexicographic order of the sorted element lists of two bitsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ b;
  if (!x) return false;
  std::uint64_t low = x & (~x + 1);
  std::uint64_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<Vertex> mask_to_vector(std::uint64_t m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int count_components_without(const Graph& g, const std::vector<Vertex>& W) {
  std::vector<char> removed(g.num_vertices(), 0);
  for (Vertex v : W) removed.at(v) = 1;
  return connected_components(g, removed).count;
}

CutScore cut_score(const Graph& g, const std::vector<Vertex>& W) {
  std::set<Vertex> distinct(W.begin(), W.end());
  std::vector<Vertex> w(distinct.begin(), distinct.end());
  const int c = count_components_without(g, w);
  if (c <= 1)
    throw NotACutset("G - W has " + std::to_string(c) + " component(s)");
  const std::int64_t k = static_cast<std::int64_t>(w.size());
  return CutScore{Rational(k, c), Rational(3 * c - 2 * k, 2)};
}

ToughnessReport toughness_exact(const Graph& g, int bound) {
  const int n = g.num_vertices();
  if (bound > 30) bound = 30;
  if (n > bound)
    throw TooLarge("toughness_exact: n = " + std::to_string(n) +
                   " exceeds bound " + std::to_string(bound));
  ToughnessReport out;
  if (is_complete(g)) {
    out.infinite = true;
    return out;
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  bool have = false;
  Rational best;
  std::uint64_t best_w = 0;
  int best_c = 0;
  for (std::uint64_t w = 0; w <= all; ++w) {
    const int k = std::popcount(w);
    if (k > n - 2) continue;
    if (have && Rational(k, n - k) > best) continue;
    const int c = components_mask(adj, all & ~w);
    if (c < 2) continue;
    Rational r(k, c);
    if (!have || r < best || (r == best && lex_less(w, best_w))) {
      have = true;
      best = r;
      best_w = w;
      best_c = c;
    }
  }
  out.value = best;
  out.witness = Cut{mask_to_vector(best_w), best_c};
  return out;
}

ToughnessReport toughness_by_size(const Graph& g, int bound) {
  const int n = g.num_vertices();
  if (n > bound)
    throw TooLarge("toughness_by_size: n = " + std::to_string(n) +
                   " exceeds bound " + std::to_string(bound));
  ToughnessReport out;
  if (is_complete(g)) {
    out.infinite = true;
    return out;
  }
  bool have = false;
  Rational best;
  std::vector<Vertex> best_w;
  int best_c = 0;
  for (int k = 0; k <= n - 2; ++k) {
    if (have && Rational(k, n - k) > best) break;
    std::vector<Vertex> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
      const int c = count_components_without(g, comb);
      if (c >= 2) {
        Rational r(k, c);
        if (!have || r < best || (r == best && comb < best_w)) {
          have = true;
          best = r;
          best_w = comb;
          best_c = c;
        }
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  out.value = best;
  out.witness = Cut{best_w, best_c};
  return out;
}

Cut canonical_cut(const LabeledGraph& lg, const std::vector<Edge>& pairs) {
  const int n = lg.graph.num_vertices();
  if (static_cast<int>(lg.labels.size()) != n || lg.reg.rings.empty() ||
      lg.reg.g0_edges.empty())
    throw LabelsMissing("canonical_cut needs the labelled full construction");
  const Vertex w0 = lg.reg.g0_w;
  std::set<Edge> g0_edges(lg.reg.g0_edges.begin(), lg.reg.g0_edges.end());
  std::vector<char> matched(lg.reg.g0_n, 0);
  for (const Edge& e : pairs) {
    if (!g0_edges.count(e) || e.u == w0 || e.v == w0)
      throw MatchingInvalid("pair " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " is not an edge of G0 - w");
    if (matched[e.u] || matched[e.v])
      throw MatchingInvalid("pairs share a vertex");
    matched[e.u] = matched[e.v] = 1;
  }

  std::map<std::pair<int, int>, Vertex> tri;
  std::map<int, Vertex> t2_of_edge;
  std::vector<Vertex> W;
  for (Vertex v = 0; v < n; ++v) {
    const VertexLabel& l = lg.labels[v];
    if (l.cls == VertexClass::U_TRI) tri[{l.i, l.j}] = v;
    if (l.cls == VertexClass::T2) t2_of_edge[l.i] = v;
    if (l.cls == VertexClass::S) W.push_back(v);
  }
  W.insert(W.end(), lg.reg.rings[0].begin(), lg.reg.rings[0].end());

  std::map<Vertex, Vertex> representative;  // G0 vertex -> triangle vertex
  for (const Edge& e : pairs) {
    auto k = std::lower_bound(lg.reg.g0_edges.begin(), lg.reg.g0_edges.end(),
                              e) -
             lg.reg.g0_edges.begin();
    Vertex t = t2_of_edge.at(static_cast<int>(k));
    W.push_back(t);
    for (Vertex x : lg.graph.rotation(t)) {
      const VertexLabel& l = lg.labels[x];
      if (l.cls == VertexClass::U_TRI) representative[l.i] = x;
    }
  }
  for (Vertex x = 0; x < lg.reg.g0_n; ++x) {
    if (x == w0) continue;
    auto it = representative.find(x);
    for (int j = 1; j <= 3; ++j) {
      Vertex v = tri.at({x, j});
      bool keep = it != representative.end() ? v == it->second : j == 1;
      if (!keep) W.push_back(v);
    }
  }
  std::sort(W.begin(), W.end());
  Cut cut;
  cut.W = W;
  cut.components = count_components_without(lg.graph.abstract(), W);
  return cut;
}

bool verify_square_relation(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  if (static_cast<int>(cycle.size()) != n)
    throw NotAPermutation("cycle length differs from n");
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v])
      throw NotAPermutation("cycle is not a permutation of V(g)");
    seen[v] = 1;
  }
  std::set<Edge> want;
  for (int i = 0; i < n; ++i) {
    for (int step = 1; step <= 2; ++step) {
      Vertex a = cycle[i], b = cycle[(i + step) % n];
      if (a != b) want.insert(Edge(a, b));
    }
  }
  std::vector<Edge> have = g.edges();
  return std::set<Edge>(have.begin(), have.end()) == want;
}

std::vector<Vertex> square_root_cycle(const LabeledGraph& d) {
  const auto& a1 = d.reg.rings.at(0);
  const auto& a2 = d.reg.rings.at(1);
  const int m = static_cast<int>(a1.size());
  std::vector<Vertex> q;
  for (int i = 0; i < m; ++i) {
    q.push_back(a1[i]);
    q.push_back(a2[(i + 1) % m]);
  }
  return q;
}

Rational recorded_d_toughness(int m) {
  switch (m) {
    case 5: return Rational(RECORDED_D5_NUM, RECORDED_D5_DEN);
    case 6: return Rational(RECORDED_D6_NUM, RECORDED_D6_DEN);
  }
  throw ParameterOutOfRange("no recorded toughness for D(" +
                            std::to_string(m) + ")");
}

VerificationReport d_two_tough_evidence(const LabeledGraph& d,
                                        bool include_small) {
  VerificationReport r;
  const Graph full = d.graph.abstract();
  const auto& rings = d.reg.rings;
  if (rings.size() != 4) throw LabelsMissing("D needs its four rings");
  const int m = static_cast<int>(rings[0].size());

  std::vector<Vertex> keep(rings[0]);
  keep.insert(keep.end(), rings[1].begin(), rings[1].end());
  std::map<Vertex, Vertex> index;
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) index[keep[k]] = k;
  const Graph d1 = full.induced(keep);
  std::vector<Vertex> q;
  for (Vertex v : square_root_cycle(d)) q.push_back(index.at(v));
  r.run("d1_is_square_of_q", [&](VerificationReport& out) {
    bool ok = verify_square_relation(d1, q);
    out.add("d1_is_square_of_q", ok, "true", ok ? "true" : "false");
  });

  Graph qcycle(2 * m);
  for (int i = 0; i < 2 * m; ++i) qcycle.add_edge(q[i], q[(i + 1) % (2 * m)]);
  r.run("kappa_q", [&](VerificationReport& out) {
    out.expect("kappa_q", "2", std::to_string(vertex_connectivity(qcycle)));
  });

  r.run("d1_spans_into_d2", [&](VerificationReport& out) {
    std::map<Vertex, Vertex> phi;
    for (int j = 0; j < m; ++j) {
      phi[rings[0][j]] = rings[2][j];
      phi[rings[1][j]] = rings[3][j];
    }
    int missing = 0;
    for (const Edge& e : d1.edges())
      if (!full.has_edge(phi.at(keep[e.u]), phi.at(keep[e.v]))) ++missing;
    out.expect("d1_spans_into_d2", "0 unmapped edges",
               std::to_string(missing) + " unmapped edges");
  });

  if (include_small) {
    for (int k : {5, 6}) {
      std::string name = "tau_D" + std::to_string(k);
      r.run(name, [&](VerificationReport& out) {
        ToughnessReport t = toughness_exact(build_d(k).graph.abstract(), 24);
        out.expect(name, to_string(recorded_d_toughness(k)),
                   t.infinite ? "inf" : to_string(t.value));
      });
    }
  }
  return r;
}

}  // namespace tritough
