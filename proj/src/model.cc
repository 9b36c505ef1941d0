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

#include "icx/model.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icx/errors.h"

namespace icx {

Instance::Instance(std::vector<Action> actions, std::string null_id,
                   SetFunctionPtr cost_fn)
    : actions_(std::move(actions)), cost_fn_(std::move(cost_fn)) {
  if (actions_.empty()) throw ValidationError("instance has no actions");
  if (static_cast<int>(actions_.size()) > kMaxActions) {
    throw ValidationError("instance has more than 30 actions");
  }
  for (int a = 0; a < size(); ++a) {
    const Action& action = actions_[a];
    if (!index_.emplace(action.id, a).second) {
      throw ValidationError("duplicate action id '" + action.id + "'");
    }
    if (!(action.cost >= 0.0) || !std::isfinite(action.cost)) {
      throw ValidationError("action '" + action.id + "' has negative cost");
    }
    if (!(action.prob >= 0.0 && action.prob <= 1.0)) {
      throw ValidationError("action '" + action.id +
                            "' has success probability outside [0,1]");
    }
  }
  auto it = index_.find(null_id);
  if (it == index_.end()) {
    throw ValidationError("null action '" + null_id + "' not found");
  }
  null_index_ = it->second;
  if (actions_[null_index_].cost != 0.0) {
    throw ValidationError("null action must have zero cost");
  }
  if (cost_fn_ == nullptr) throw ValidationError("missing cost function");
  if (cost_fn_->size() != size()) {
    throw ValidationError("cost function ground set size does not match");
  }
}

int Instance::IndexOf(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown action id '" + id + "'");
  return it->second;
}

std::vector<std::string> Instance::ids() const {
  std::vector<std::string> out;
  out.reserve(actions_.size());
  for (const Action& a : actions_) out.push_back(a.id);
  return out;
}

Instance Instance::WithCostFunction(SetFunctionPtr cost_fn) const {
  return Instance(actions_, null_id(), std::move(cost_fn));
}

void ValidateScheme(const Instance& inst, const InspectionScheme& scheme,
                    double tol) {
  if (scheme.suggested < 0 || scheme.suggested >= inst.size()) {
    throw InputError("suggested action out of range");
  }
  if (!(scheme.alpha >= 0.0 && scheme.alpha <= 1.0)) {
    throw InputError("payment alpha outside [0,1]");
  }
  const Subset full = FullSet(inst.size());
  double total = 0.0;
  std::vector<Subset> seen;
  for (const WeightedSet& ws : scheme.distribution) {
    if (!(ws.prob >= 0.0)) throw InputError("negative inspection probability");
    if (!IsSubsetOf(ws.set, full)) {
      throw InputError("inspected set outside the action set");
    }
    seen.push_back(ws.set);
    total += ws.prob;
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InputError("duplicate inspected set in distribution");
  }
  if (std::abs(total - 1.0) > tol) {
    throw InputError("inspection probabilities do not sum to 1");
  }
}

double Marginal(const Instance& inst, const InspectionScheme& scheme, int j) {
  if (j < 0 || j >= inst.size()) throw InputError("action index out of range");
  double sum = 0.0;
  for (const WeightedSet& ws : scheme.distribution) {
    if (Contains(ws.set, j)) sum += ws.prob;
  }
  return sum;
}

MarginalProfile Marginals(const Instance& inst,
                          const InspectionScheme& scheme) {
  MarginalProfile out(inst.size(), 0.0);
  for (int j = 0; j < inst.size(); ++j) out[j] = Marginal(inst, scheme, j);
  return out;
}

double CaughtProbability(const InspectionScheme& scheme, int j) {
  const Subset pair = Singleton(scheme.suggested) | Singleton(j);
  double sum = 0.0;
  for (const WeightedSet& ws : scheme.distribution) {
    if ((ws.set & pair) != 0) sum += ws.prob;
  }
  return sum;
}

double ExpectedInspectionCost(const Instance& inst,
                              const InspectionScheme& scheme) {
  double sum = 0.0;
  for (const WeightedSet& ws : scheme.distribution) {
    if (ws.prob == 0.0 || ws.set == kEmptySet) continue;
    sum += ws.prob * inst.cost_fn().Value(ws.set);
  }
  return sum;
}

double AgentUtility(const Instance& inst, const InspectionScheme& scheme,
                    int j) {
  if (j < 0 || j >= inst.size()) throw InputError("action index out of range");
  const double alpha = scheme.alpha;
  if (j == scheme.suggested) return alpha * inst.prob(j) - inst.cost(j);
  return alpha * inst.prob(j) * (1.0 - CaughtProbability(scheme, j)) -
         inst.cost(j);
}

double PrincipalUtility(const Instance& inst, const InspectionScheme& scheme,
                        int j) {
  if (j < 0 || j >= inst.size()) throw InputError("action index out of range");
  const double inspection = ExpectedInspectionCost(inst, scheme);
  if (j == scheme.suggested) {
    return (1.0 - scheme.alpha) * inst.prob(j) - inspection;
  }
  const double paid = scheme.alpha * (1.0 - CaughtProbability(scheme, j));
  return (1.0 - paid) * inst.prob(j) - inspection;
}

std::vector<int> BestResponses(const Instance& inst,
                               const InspectionScheme& scheme, double tol) {
  std::vector<double> utility(inst.size());
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < inst.size(); ++j) {
    utility[j] = AgentUtility(inst, scheme, j);
    best = std::max(best, utility[j]);
  }
  std::vector<int> out;
  for (int j = 0; j < inst.size(); ++j) {
    if (utility[j] >= best - tol) out.push_back(j);
  }
  return out;
}

bool IsIncentiveCompatible(const Instance& inst,
                           const InspectionScheme& scheme, double tol) {
  const std::vector<int> br = BestResponses(inst, scheme, tol);
  return std::find(br.begin(), br.end(), scheme.suggested) != br.end();
}

int PrincipalFavoredResponse(const Instance& inst,
                             const InspectionScheme& scheme, double tol) {
  int chosen = -1;
  double best = -std::numeric_limits<double>::infinity();
  for (int j : BestResponses(inst, scheme, tol)) {
    const double u = PrincipalUtility(inst, scheme, j);
    if (u > best) {
      best = u;
      chosen = j;
    }
  }
  return chosen;
}

std::vector<WeightedSet> Canonicalize(std::vector<WeightedSet> distribution) {
  std::sort(distribution.begin(), distribution.end(),
            [](const WeightedSet& a, const WeightedSet& b) {
              return a.set < b.set;
            });
  std::vector<WeightedSet> out;
  for (const WeightedSet& ws : distribution) {
    if (!out.empty() && out.back().set == ws.set) {
      out.back().prob += ws.prob;
    } else {
      out.push_back(ws);
    }
  }
  std::erase_if(out, [](const WeightedSet& ws) { return ws.prob == 0.0; });
  return out;
}

InspectionScheme NormalizeScheme(const Instance& inst,
                                 const InspectionScheme& scheme) {
  (void)inst;
  const int i = scheme.suggested;
  InspectionScheme out{scheme.suggested, scheme.alpha, {}};
  double moved = 0.0;
  bool any = false;
  for (const WeightedSet& ws : scheme.distribution) {
    if (Contains(ws.set, i)) {
      moved += ws.prob;
      any = true;
    } else {
      out.distribution.push_back(ws);
    }
  }
  if (!any) return scheme;
  out.distribution.push_back({Singleton(i), moved});
  out.distribution = Canonicalize(std::move(out.distribution));
  return out;
}

}  // namespace icx
