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

#ifndef ICX_RAND_SOLVER_H_
#define ICX_RAND_SOLVER_H_

#include <optional>
#include <vector>

#include "icx/model.h"

namespace icx {

// Chain-supported distribution realizing a marginal profile at minimum
// expected cost for submodular costs. With ground sorted so that marginals
// ascend, level t is the suffix {ground[t], ..., ground[m-1]} with
// probability marginal(ground[t]) - marginal(ground[t-1]).
struct NestedDistribution {
  std::vector<int> ground;           // ascending-marginal order
  std::vector<WeightedSet> levels;   // one per ground element, suffix sets
  double empty_mass = 0.0;

  double ExpectedCost(const SetFunction& fn) const;
  // Nonzero levels plus the empty set, sorted by bitmask.
  std::vector<WeightedSet> Support() const;
};

// `marginals` is indexed by action; entries outside `ground` are ignored.
// Throws InfeasibleError when mass < max marginal (beyond 1e-12).
NestedDistribution NestedMinCostDistribution(const std::vector<int>& ground,
                                             const MarginalProfile& marginals,
                                             double mass);

// eta_j(alpha, p_i) = 1 - p_i - (alpha f(i) - c(i) + c(j)) / (alpha f(j)),
// the least marginal on j keeping i weakly preferred. Requires f(j) > 0 and
// alpha > 0; throws InputError otherwise.
double Eta(const Instance& inst, int i, int j, double alpha, double p_i);

// Payment cut points for suggested action i, and the eta order of A \ {i}
// inside each interval. Actions with f(j) = 0 carry no IC constraint and are
// placed first in every order.
struct IntervalPartition {
  int suggested = 0;
  std::vector<double> cutpoints;         // 0 = c_0 < c_1 < ... < c_L = 1
  std::vector<std::vector<int>> orders;  // one per [c_l, c_{l+1}]
  int num_unconstrained = 0;             // leading f(j) = 0 actions

  int num_intervals() const { return static_cast<int>(orders.size()); }
};

// Requires f(i) > c(i) > 0.
IntervalPartition Breakpoints(const Instance& inst, int i);

struct SubproblemResult {
  int suggested = 0;
  int interval = 0;
  int k = 0;  // number of leading order positions with zero marginal
  double alpha = 0.0;
  double p_i = 0.0;
  double objective = 0.0;  // alpha f(i) + expected inspection cost
  bool feasible = false;
  std::vector<double> stationary_alphas;  // interior critical points seen
};

// Minimizes alpha f(i) + p_i v({i}) + sum_{t >= k} eta_{pi(t)} (w_t - w_{t+1})
// over the closed region where positions < k have eta <= 0, positions >= k
// have eta >= 0, alpha in [max(c_l, c(i)/f(i)), c_{l+1}], p_i in [0, 1].
SubproblemResult SolveSubproblem(const Instance& inst,
                                 const IntervalPartition& partition,
                                 int interval, int k);

// Builds the scheme: {i} with probability p_i plus the nested distribution
// over A \ {i} with marginals max(0, eta) at positions >= k. Throws
// std::logic_error if the result is not IC within 1e-9.
InspectionScheme AssembleScheme(const Instance& inst,
                                const IntervalPartition& partition,
                                const SubproblemResult& result);

struct RandSolution {
  InspectionScheme scheme;
  double utility = 0.0;
  double payment = 0.0;          // alpha f(i)
  double inspection_cost = 0.0;  // sum_S p(S) v(S)
  // Winning subproblem; absent for the zero-cost shortcut.
  std::optional<SubproblemResult> winner;
  int subproblems_solved = 0;
  // Every interior stationary payment encountered, per action.
  std::vector<std::vector<double>> stationary_alphas;
};

// Optimal randomized IC scheme for submodular costs (the caller is
// responsible for the cost class).
RandSolution SolveRandomized(const Instance& inst);

}  // namespace icx

#endif  // ICX_RAND_SOLVER_H_
