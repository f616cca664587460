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

#include "tritough/verify.hpp"

#include <string>

#include "tritough/factor.hpp"
#include "tritough/faces.hpp"
#include "tritough/matching.hpp"
#include "tritough/toughness.hpp"

namespace tritough {

VerificationReport verify_construction(const LabeledGraph& g0,
                                       const LabeledGraph& g,
                                       VerifyLevel level) {
  VerificationReport r;
  r.run("counts", [&](VerificationReport& out) {
    GraphCensus c = census(g);
    auto cls = [&](VertexClass k) { return c.classes[k]; };
    out.expect("n", "838", std::to_string(c.n));
    out.expect("e", "2508", std::to_string(c.e));
    out.expect("S", "91", std::to_string(cls(VertexClass::S)));
    out.expect("T1", "63", std::to_string(cls(VertexClass::T1)));
    out.expect("T2", "168", std::to_string(cls(VertexClass::T2)));
    out.expect("U", "516",
               std::to_string(cls(VertexClass::U_TRI) + cls(VertexClass::U_D)));
  });
  r.run("plane_triangulation", [&](VerificationReport& out) {
    bool ok = is_plane_triangulation(g.graph);
    out.add("plane_triangulation", ok, "true", ok ? "true" : "false");
  });
  r.run("barrier", [&](VerificationReport& out) {
    out.append(verify_construction_barrier(g));
  });
  r.run("matching_g0_minus_w", [&](VerificationReport& out) {
    out.expect("matching_g0_minus_w", "43",
               std::to_string(max_matching(g0_minus_w(g0)).size));
  });
  if (level == VerifyLevel::kFast) return r;

  const Graph abstract = g.graph.abstract();
  r.run("two_factor", [&](VerificationReport& out) {
    TwoFactorResult tf = has_two_factor(abstract);
    out.expect("two_factor", "infeasible",
               tf.feasible ? "feasible" : "infeasible");
  });
  r.run("canonical_cut", [&](VerificationReport& out) {
    MatchingResult m = max_matching(g0_minus_w(g0));
    Cut cut = canonical_cut(g, m.pairs);
    CutScore s = cut_score(abstract, cut.W);
    out.expect("canonical_cut",
               "|W|=413 c=275 ratio=413/275 h=-1/2",
               "|W|=" + std::to_string(cut.W.size()) +
                   " c=" + std::to_string(cut.components) +
                   " ratio=" + to_string(s.ratio) + " h=" + to_string(s.h));
  });
  r.run("d_evidence", [&](VerificationReport& out) {
    out.append(d_two_tough_evidence(build_d(39)));
  });
  r.run("component_graph_round_trip", [&](VerificationReport& out) {
    bool ok = component_graph_matches_g0(g);
    out.add("component_graph_round_trip", ok, "true", ok ? "true" : "false");
  });
  return r;
}

VerificationReport verify_pipeline(const Pipeline& p, VerifyLevel level) {
  VerificationReport r;
  const std::pair<const char*, const LabeledGraph*> stages[] = {
      {"euler_g0", &p.g0}, {"euler_d", &p.d}, {"euler_g1", &p.g1},
      {"euler_g2", &p.g2}, {"euler_g", &p.g}};
  for (const auto& [name, lg] : stages) {
    bool ok = satisfies_euler(lg->graph);
    r.add(name, ok, "n-e+f=2", ok ? "n-e+f=2" : "violated");
  }
  r.append(verify_construction(p.g0, p.g, level));
  return r;
}

}  // namespace tritough
