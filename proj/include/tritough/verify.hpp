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

#ifndef TRITOUGH_VERIFY_HPP_
#define TRITOUGH_VERIFY_HPP_

#include "tritough/construct.hpp"
#include "tritough/report.hpp"

namespace tritough {

enum class VerifyLevel { kFast, kFull };

// fast: counts, triangulation, barrier, matching in G0 - w, T independence.
// full: fast plus the 2-factor decision, canonical cut, D certificates and
// the component-graph round trip.
VerificationReport verify_construction(const LabeledGraph& g0,
                                       const LabeledGraph& g,
                                       VerifyLevel level);

// Euler's formula at every stage, then verify_construction(p.g0, p.g).
VerificationReport verify_pipeline(const Pipeline& p, VerifyLevel level);

}  // namespace tritough

#endif  // TRITOUGH_VERIFY_HPP_
