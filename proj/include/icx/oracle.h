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

#ifndef ICX_ORACLE_H_
#define ICX_ORACLE_H_

#include <vector>

#include "icx/model.h"

namespace icx {

// Reference solvers used for verification only. They share no code with the
// deterministic and randomized solvers beyond the model semantics.

struct OracleResult {
  InspectionScheme scheme;
  double utility = 0.0;
  int lp_solves = 0;
};

inline constexpr int kMaxBruteForceDeterministic = 12;
inline constexpr int kMaxBruteForceRandomized = 7;
inline constexpr int kMaxMarginalLpGround = 10;

// Enumerates every (i, S), takes the least IC payment for each pair, and
// returns the best IC deterministic scheme. n <= 12.
OracleResult BruteForceDeterministic(const Instance& inst, double tol = 1e-12);

// LP over all 2^|ground| subsets: minimize sum p(S) v(S) subject to the
// given marginals and total mass. Throws InfeasibleError if mass < max
// marginal or the LP is infeasible.
struct CouplingResult {
  std::vector<WeightedSet> distribution;
  double cost = 0.0;
};
CouplingResult LpMinCostGivenMarginals(const std::vector<int>& ground,
                                       const MarginalProfile& marginals,
                                       double mass, const SetFunction& fn);

// LP in the inspection probabilities for a fixed suggested action and
// payment: minimize alpha f(i) + sum_{S in A\{i}} p(S) v(S) + p_i v({i})
// subject to the IC constraints written with marginals. Returns the scheme
// and principal cost, or infeasible if alpha < c(i)/f(i).
struct FixedPaymentResult {
  bool feasible = false;
  double objective = 0.0;  // payment plus expected inspection cost
  InspectionScheme scheme;
};
FixedPaymentResult SolveFixedPayment(const Instance& inst, int i,
                                     double alpha);

struct RandomizedOracleOptions {
  double alpha_resolution = 1e-4;
  // Extra payments to evaluate, per action (e.g. harvested stationary
  // points). May be empty or shorter than n.
  std::vector<std::vector<double>> extra_alphas;
  // Golden-section refinement around every local minimum of the grid.
  bool refine = true;
};

// Randomized optimum by payment search with an exact LP inside. n <= 7.
OracleResult BruteForceRandomized(const Instance& inst,
                                  const RandomizedOracleOptions& options = {});

}  // namespace icx

#endif  // ICX_ORACLE_H_
