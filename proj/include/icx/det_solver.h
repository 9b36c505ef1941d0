// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICX_DET_SOLVER_H_
#define ICX_DET_SOLVER_H_

#include <map>
#include <string>
#include <vector>

#include "icx/model.h"

namespace icx {

// Where a deterministic candidate came from.
enum class DetProvenance { kZeroCost, kSelfInspect, kFullSet, kPairSet };

std::string ToString(DetProvenance p);

struct DetCandidate {
  int suggested = 0;
  double alpha = 0.0;
  Subset inspected = kEmptySet;
  double utility = 0.0;  // (1 - alpha) f(i) - v(inspected)
  DetProvenance provenance = DetProvenance::kZeroCost;
  int pair_action = -1;  // j for kPairSet

  InspectionScheme scheme() const {
    return InspectionScheme::Deterministic(suggested, alpha, inspected);
  }
};

// A_i, S_i and S_{i,j}: actions the agent strictly prefers to i at the
// critical payments c(i)/f(i) and (c(i)-c(j))/(f(i)-f(j)).
struct CandidateSets {
  Subset lower_deviators = kEmptySet;  // A_i
  Subset full_set = kEmptySet;         // S_i
  std::map<int, Subset> pair_sets;     // j in A_i -> S_{i,j}
};

// Strict preferences are decided as "exceeds by more than strict_tol".
inline constexpr double kStrictTol = 1e-12;

// Requires f(i) > c(i) > 0; throws InputError otherwise.
CandidateSets ComputeCandidateSets(const Instance& inst, int i,
                                   double strict_tol = kStrictTol);

// Critical payment at which the agent is indifferent between i and j
// (requires f(i) != f(j)).
double CriticalPayment(const Instance& inst, int i, int j);

struct DetSolution {
  DetCandidate best;
  std::vector<DetCandidate> candidates;
};

// Optimal deterministic IC inspection scheme for any monotone cost. Issues
// at most n+1 value queries per eligible action. The returned scheme is
// checked IC (tolerance 1e-12); a failure throws std::logic_error.
DetSolution SolveDeterministic(const Instance& inst,
                               double strict_tol = kStrictTol);

// Best IC scheme that never inspects: (i, minimal IC alpha, {empty: 1}).
DetCandidate SolveWithoutInspection(const Instance& inst, double tol = 1e-12);

}  // namespace icx

#endif  // ICX_DET_SOLVER_H_
