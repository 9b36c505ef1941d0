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

#ifndef ICX_MODEL_H_
#define ICX_MODEL_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icx/costfn.h"
#include "icx/subset.h"

namespace icx {

// Default comparison tolerance for utilities and IC checks.
inline constexpr double kDefaultTol = 1e-9;
// Tolerance used when validating probability distributions.
inline constexpr double kValidationTol = 1e-12;

struct Action {
  std::string id;
  double cost = 0.0;  // c(a), in reward units (success pays 1)
  double prob = 0.0;  // f(a), success probability
};

// Actions, a designated zero-cost null action, and an inspection cost
// function over the action set.
class Instance {
 public:
  Instance(std::vector<Action> actions, std::string null_id,
           SetFunctionPtr cost_fn);

  int size() const { return static_cast<int>(actions_.size()); }
  const std::vector<Action>& actions() const { return actions_; }
  const Action& action(int index) const { return actions_[index]; }
  double cost(int index) const { return actions_[index].cost; }
  double prob(int index) const { return actions_[index].prob; }
  int null_index() const { return null_index_; }
  const std::string& null_id() const { return actions_[null_index_].id; }
  const SetFunction& cost_fn() const { return *cost_fn_; }
  const SetFunctionPtr& cost_fn_ptr() const { return cost_fn_; }

  // Index of the action with the given id; throws InputError if unknown.
  int IndexOf(const std::string& id) const;
  std::vector<std::string> ids() const;

  // Same actions with a different cost function (e.g. a counting wrapper).
  Instance WithCostFunction(SetFunctionPtr cost_fn) const;

 private:
  std::vector<Action> actions_;
  int null_index_ = 0;
  SetFunctionPtr cost_fn_;
  std::map<std::string, int> index_;
};

// (subset, probability) pair of a sparse inspection distribution.
struct WeightedSet {
  Subset set = 0;
  double prob = 0.0;
};

// Suggested action i, payment alpha, and a sparse distribution p over
// inspected subsets. Deterministic schemes have a single set of mass 1.
struct InspectionScheme {
  int suggested = 0;
  double alpha = 0.0;
  std::vector<WeightedSet> distribution;

  static InspectionScheme Deterministic(int suggested, double alpha,
                                        Subset inspected) {
    return {suggested, alpha, {{inspected, 1.0}}};
  }
};

using MarginalProfile = std::vector<double>;

// Throws InputError unless: alpha in [0,1], probabilities nonnegative and
// summing to 1 within tol, subsets inside the action set, no duplicates.
void ValidateScheme(const Instance& inst, const InspectionScheme& scheme,
                    double tol = kValidationTol);

// p(j) = sum of p(S) over supported S containing j.
double Marginal(const Instance& inst, const InspectionScheme& scheme, int j);
MarginalProfile Marginals(const Instance& inst, const InspectionScheme& scheme);

// Probability that a deviation to j is caught: mass of sets meeting
// {suggested, j}.
double CaughtProbability(const InspectionScheme& scheme, int j);

// Expected inspection cost sum_S p(S) v(S); queries only supported sets.
double ExpectedInspectionCost(const Instance& inst,
                              const InspectionScheme& scheme);

double AgentUtility(const Instance& inst, const InspectionScheme& scheme,
                    int j);
double PrincipalUtility(const Instance& inst, const InspectionScheme& scheme,
                        int j);

// Actions whose agent utility is within tol of the maximum.
std::vector<int> BestResponses(const Instance& inst,
                               const InspectionScheme& scheme, double tol);

bool IsIncentiveCompatible(const Instance& inst,
                           const InspectionScheme& scheme, double tol);

// Best response preferred by the principal (highest principal utility, then
// smallest index).
int PrincipalFavoredResponse(const Instance& inst,
                             const InspectionScheme& scheme, double tol);

// Moves all mass on sets containing the suggested action onto the singleton
// {suggested}. Agent utilities are unchanged; principal utility weakly
// increases for monotone costs.
InspectionScheme NormalizeScheme(const Instance& inst,
                                 const InspectionScheme& scheme);

// Merges duplicate subsets and drops zero-probability entries; the result is
// sorted by bitmask.
std::vector<WeightedSet> Canonicalize(std::vector<WeightedSet> distribution);

}  // namespace icx

#endif  // ICX_MODEL_H_
