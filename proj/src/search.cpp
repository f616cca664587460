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

// Threshold-accepting local search for cutsets of small |W| / c(G - W).
// Every score and every acceptance test is an exact rational comparison;
// randomness only picks moves.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

#include "tritough/matching.hpp"
#include "tritough/toughness.hpp"

namespace tritough {
namespace {

constexpr int kChains = 8;
// Even chains minimise |W| / c, odd chains minimise |W| - (3/2) c. The
// acceptance threshold starts at 1/kRatioThresholdDen (resp. kSlackThreshold)
// and decays linearly to 0.
constexpr std::int64_t kRatioThresholdDen = 8;
constexpr std::int64_t kSlackThreshold = 2;
// Returns to the chain's best set this many times per chain.
constexpr int kReturns = 4;
// Random vertices toggled when a chain starts from a seed cut.
constexpr int kKick = 3;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRITOUGH_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

class Evaluator {
 public:
  explicit Evaluator(const Graph& g)
      : g_(g), mark_(g.num_vertices(), 0) {}

  int components(const std::vector<char>& in_w) {
    ++stamp_;
    int c = 0;
    for (Vertex s = 0; s < g_.num_vertices(); ++s) {
      if (in_w[s] || mark_[s] == stamp_) continue;
      ++c;
      mark_[s] = stamp_;
      stack_.push_back(s);
      while (!stack_.empty()) {
        Vertex v = stack_.back();
        stack_.pop_back();
        for (Vertex w : g_.neighbors(v)) {
          if (in_w[w] || mark_[w] == stamp_) continue;
          mark_[w] = stamp_;
          stack_.push_back(w);
        }
      }
    }
    return c;
  }

 private:
  const Graph& g_;
  std::vector<int> mark_;
  std::vector<Vertex> stack_;
  int stamp_ = 0;
};

struct Candidate {
  bool valid = false;
  Rational ratio;
  std::vector<Vertex> W;
  int c = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (a.ratio != b.ratio) return a.ratio < b.ratio;
  return a.W < b.W;
}

class Chain {
 public:
  Chain(const Graph& g, const SearchOptions& opt, int index,
        std::int64_t budget)
      : g_(g),
        opt_(opt),
        n_(g.num_vertices()),
        budget_(budget),
        rng_(mix(opt.seed * 1000003ULL + static_cast<std::uint64_t>(index))),
        eval_(g),
        in_w_(n_, 0),
        index_(index) {}

  Candidate run() {
    init();
    greedy_groups();
    walk();
    return best_;
  }

  std::int64_t used() const { return used_; }

 private:
  int pick(int size) {
    return std::uniform_int_distribution<int>(0, size - 1)(rng_);
  }

  bool slack_mode() const { return index_ % 2 == 1; }

  // Energy of the current set; records valid cutsets.
  Rational evaluate() {
    ++used_;
    const int c = eval_.components(in_w_);
    const std::int64_t k = size_;
    if (c >= 2) {
      Candidate cand;
      cand.valid = true;
      cand.ratio = Rational(k, c);
      cand.c = c;
      if (!best_.valid || cand.ratio <= best_.ratio) {
        for (Vertex v = 0; v < n_; ++v)
          if (in_w_[v]) cand.W.push_back(v);
        if (better(cand, best_)) best_ = std::move(cand);
      }
    }
    if (slack_mode()) return Rational(2 * k - 3 * c, 2);
    return Rational(k, std::max(c, 1));
  }

  void set(Vertex v, bool on) {
    if (in_w_[v] == on) return;
    in_w_[v] = on;
    size_ += on ? 1 : -1;
  }

  void load(const std::vector<Vertex>& w) {
    std::fill(in_w_.begin(), in_w_.end(), 0);
    size_ = 0;
    for (Vertex v : w) set(v, true);
  }

  void init() {
    if (!opt_.seed_cuts.empty()) {
      const int s = static_cast<int>(opt_.seed_cuts.size());
      load(opt_.seed_cuts[index_ % s]);
      if (index_ >= s)
        for (int k = 0; k < kKick; ++k) {
          Vertex v = pick(n_);
          set(v, !in_w_[v]);
        }
    } else {
      for (Vertex v = 0; v < n_; ++v)
        set(v, std::uniform_int_distribution<int>(0, 2)(rng_) == 0);
    }
    if (size_ >= n_) set(pick(n_), false);
    energy_ = evaluate();
  }

  // First-improvement passes over block toggles.
  void greedy_groups() {
    const auto& groups = opt_.groups;
    if (groups.empty()) return;
    const std::int64_t cap = budget_ / 4;
    bool improved = true;
    while (improved && used_ < cap) {
      improved = false;
      for (const auto& grp : groups) {
        if (used_ >= cap) break;
        if (grp.empty()) continue;
        const bool on = !in_w_[grp[0]];
        std::vector<Vertex> changed;
        for (Vertex v : grp)
          if (in_w_[v] != on) {
            changed.push_back(v);
            set(v, on);
          }
        if (size_ >= n_ || changed.empty()) {
          for (Vertex v : changed) set(v, !on);
          continue;
        }
        Rational e = evaluate();
        if (e < energy_) {
          energy_ = e;
          improved = true;
        } else {
          for (Vertex v : changed) set(v, !on);
        }
      }
    }
  }

  // Applies one random move; returns the vertices whose state flipped.
  std::vector<Vertex> move() {
    std::vector<Vertex> flipped;
    auto flip = [&](Vertex v) {
      set(v, !in_w_[v]);
      flipped.push_back(v);
    };
    const int kind = pick(100);
    if (kind < 15 && !opt_.groups.empty()) {
      const auto& grp = opt_.groups[pick(static_cast<int>(opt_.groups.size()))];
      if (!grp.empty()) {
        const bool on = !in_w_[grp[0]];
        for (Vertex v : grp)
          if (in_w_[v] != on) flip(v);
      }
    } else if (kind < 45 && size_ > 0) {
      // Add a neighbour of W.
      Vertex v = random_member();
      const auto& nb = g_.neighbors(v);
      if (!nb.empty()) {
        Vertex w = nb[pick(static_cast<int>(nb.size()))];
        if (!in_w_[w]) flip(w);
      }
    } else if (kind < 70 && size_ > 0) {
      flip(random_member());
    } else if (kind < 85 && size_ > 0) {
      // Swap a member for one of its neighbours.
      Vertex v = random_member();
      const auto& nb = g_.neighbors(v);
      if (!nb.empty()) {
        Vertex w = nb[pick(static_cast<int>(nb.size()))];
        if (!in_w_[w]) {
          flip(v);
          flip(w);
        }
      }
    } else {
      flip(pick(n_));
    }
    return flipped;
  }

  Vertex random_member() {
    // Rejection sampling; W is non-empty.
    for (;;) {
      Vertex v = pick(n_);
      if (in_w_[v]) return v;
    }
  }

  void walk() {
    const std::int64_t start = used_;
    const std::int64_t len = std::max<std::int64_t>(1, budget_ - start);
    const std::int64_t leg = std::max<std::int64_t>(1, len / kReturns);
    while (used_ < budget_) {
      const std::int64_t i = used_ - start;
      if (i > 0 && i % leg == 0 && best_.valid) {
        load(best_.W);
        energy_ = evaluate();
        continue;
      }
      std::vector<Vertex> flipped = move();
      if (flipped.empty() || size_ >= n_) {
        for (Vertex v : flipped) set(v, !in_w_[v]);
        ++used_;
        continue;
      }
      Rational threshold = slack_mode()
                               ? Rational(kSlackThreshold * (len - i), len)
                               : Rational(len - i, len * kRatioThresholdDen);
      Rational e = evaluate();
      if (e <= energy_ + threshold) {
        energy_ = e;
      } else {
        for (Vertex v : flipped) set(v, !in_w_[v]);
      }
    }
  }

  const Graph& g_;
  const SearchOptions& opt_;
  const int n_;
  const std::int64_t budget_;
  std::mt19937_64 rng_;
  Evaluator eval_;
  std::vector<char> in_w_;
  int size_ = 0;
  int index_;
  Rational energy_;
  std::int64_t used_ = 0;
  Candidate best_;
};

}  // namespace

SearchResult search_cuts(const Graph& g, const SearchOptions& options) {
  SearchResult out;
  const int n = g.num_vertices();
  if (n < 3 || g.num_edges() == static_cast<long>(n) * (n - 1) / 2)
    return out;

  // N(v) for every v, in vertex order.
  Candidate local;
  {
    Evaluator eval(g);
    std::vector<char> in_w(n, 0);
    for (Vertex v = 0; v < n && out.evaluations < options.budget; ++v) {
      for (Vertex w : g.neighbors(v)) in_w[w] = 1;
      const int c = eval.components(in_w);
      ++out.evaluations;
      if (c >= 2) {
        Candidate cand{true, Rational(g.degree(v), c),
                       std::vector<Vertex>(g.neighbors(v)), c};
        if (better(cand, local)) local = std::move(cand);
      }
      for (Vertex w : g.neighbors(v)) in_w[w] = 0;
    }
  }
  const std::int64_t rest = options.budget - out.evaluations;

  std::vector<Candidate> results(kChains);
  std::vector<std::int64_t> used(kChains, 0);
  auto run_chain = [&](int k) {
    std::int64_t share = rest / kChains + (k < rest % kChains ? 1 : 0);
    if (share <= 0) return;
    Chain chain(g, options, k, share);
    results[k] = chain.run();
    used[k] = chain.used();
  };
  const int workers = std::min(worker_count(options.workers), kChains);
  if (workers <= 1) {
    for (int k = 0; k < kChains; ++k) run_chain(k);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (int k = t; k < kChains; k += workers) run_chain(k);
      });
    for (auto& th : pool) th.join();
  }

  Candidate best = local;
  for (int k = 0; k < kChains; ++k) {
    if (better(results[k], best)) best = results[k];
    out.evaluations += used[k];
  }
  if (!best.valid) return out;
  out.found = true;
  out.cut = Cut{best.W, count_components_without(g, best.W)};
  out.score = cut_score(g, best.W);
  return out;
}

SearchOptions construction_hints(const LabeledGraph& lg) {
  SearchOptions opt;
  Graph g0w(lg.reg.g0_n);
  for (const Edge& e : lg.reg.g0_edges)
    if (e.u != lg.reg.g0_w && e.v != lg.reg.g0_w) g0w.add_edge(e.u, e.v);
  MatchingResult m = max_matching(g0w);
  for (int size : {m.size, m.size / 2, 0}) {
    std::vector<Edge> pairs(m.pairs.begin(), m.pairs.begin() + size);
    opt.seed_cuts.push_back(canonical_cut(lg, pairs).W);
  }
  std::vector<Vertex> st = lg.vertices_of(VertexClass::S);
  for (VertexClass c : {VertexClass::T1, VertexClass::T2})
    for (Vertex v : lg.vertices_of(c)) st.push_back(v);
  std::sort(st.begin(), st.end());
  opt.seed_cuts.push_back(st);

  for (const auto& t : lg.reg.s_triangles)
    opt.groups.push_back({t[0], t[1], t[2]});
  for (const auto& t : lg.reg.c3_triangles) {
    opt.groups.push_back({t[0], t[1], t[2]});
    opt.groups.push_back({t[1], t[2]});
    opt.groups.push_back({t[0], t[2]});
    opt.groups.push_back({t[0], t[1]});
  }
  for (const Spoke& s : lg.reg.spokes)
    opt.groups.push_back(std::vector<Vertex>(s.path.begin() + 1, s.path.end()));
  if (!lg.reg.rings.empty()) opt.groups.push_back(lg.reg.rings[0]);
  return opt;
}

}  // namespace tritough
