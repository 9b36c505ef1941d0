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

#include "icx/det_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "icx/errors.h"

namespace icx {
namespace {

// u_j(alpha) - u_i(alpha) when neither action is inspected.
double PreferenceGap(const Instance& inst, int i, int j, double alpha) {
  return alpha * (inst.prob(j) - inst.prob(i)) - (inst.cost(j) - inst.cost(i));
}

// Actions j != i the agent strictly prefers to i at the given payment.
Subset StrictDeviators(const Instance& inst, int i, double alpha,
                       double strict_tol) {
  Subset out = kEmptySet;
  for (int j = 0; j < inst.size(); ++j) {
    if (j != i && PreferenceGap(inst, i, j, alpha) > strict_tol) {
      out |= Singleton(j);
    }
  }
  return out;
}

bool Better(const DetCandidate& a, const DetCandidate& b) {
  if (std::abs(a.utility - b.utility) > 1e-12) return a.utility > b.utility;
  if (Cardinality(a.inspected) != Cardinality(b.inspected)) {
    return Cardinality(a.inspected) < Cardinality(b.inspected);
  }
  return a.alpha < b.alpha;
}

}  // namespace

std::string ToString(DetProvenance p) {
  switch (p) {
    case DetProvenance::kZeroCost:
      return "zero_cost";
    case DetProvenance::kSelfInspect:
      return "self_inspect";
    case DetProvenance::kFullSet:
      return "full_set";
    case DetProvenance::kPairSet:
      return "pair_set";
  }
  return "unknown";
}

double CriticalPayment(const Instance& inst, int i, int j) {
  return (inst.cost(i) - inst.cost(j)) / (inst.prob(i) - inst.prob(j));
}

CandidateSets ComputeCandidateSets(const Instance& inst, int i,
                                   double strict_tol) {
  if (!(inst.prob(i) > inst.cost(i) && inst.cost(i) > 0.0)) {
    throw InputError("candidate sets require f(i) > c(i) > 0");
  }
  const double base = inst.cost(i) / inst.prob(i);
  CandidateSets out;
  out.full_set = StrictDeviators(inst, i, base, strict_tol);
  for (int j : Elements(out.full_set)) {
    if (inst.prob(j) < inst.prob(i)) out.lower_deviators |= Singleton(j);
  }
  for (int j : Elements(out.lower_deviators)) {
    out.pair_sets[j] =
        StrictDeviators(inst, i, CriticalPayment(inst, i, j), strict_tol);
  }
  return out;
}

DetSolution SolveDeterministic(const Instance& inst, double strict_tol) {
  DetSolution out;
  const SetFunction& v = inst.cost_fn();
  auto value = [&](Subset s) { return s == kEmptySet ? 0.0 : v.Value(s); };

  int zero_cost = -1;
  for (int a = 0; a < inst.size(); ++a) {
    if (inst.cost(a) == 0.0 &&
        (zero_cost < 0 || inst.prob(a) > inst.prob(zero_cost))) {
      zero_cost = a;
    }
  }
  // The null action always qualifies.
  out.candidates.push_back({zero_cost, 0.0, kEmptySet, inst.prob(zero_cost),
                            DetProvenance::kZeroCost, -1});

  for (int i = 0; i < inst.size(); ++i) {
    const double f = inst.prob(i);
    const double c = inst.cost(i);
    if (!(f > c && c > 0.0)) continue;
    const double base = c / f;
    const CandidateSets sets = ComputeCandidateSets(inst, i, strict_tol);

    out.candidates.push_back({i, base, Singleton(i),
                              (1.0 - base) * f - value(Singleton(i)),
                              DetProvenance::kSelfInspect, -1});
    out.candidates.push_back({i, base, sets.full_set,
                              (1.0 - base) * f - value(sets.full_set),
                              DetProvenance::kFullSet, -1});
    for (const auto& [j, s] : sets.pair_sets) {
      const double alpha = CriticalPayment(inst, i, j);
      if (alpha > 1.0) continue;  // payments are capped at the reward
      out.candidates.push_back({i, alpha, s, (1.0 - alpha) * f - value(s),
                                DetProvenance::kPairSet, j});
    }
  }

  out.best = out.candidates.front();
  for (const DetCandidate& cand : out.candidates) {
    if (Better(cand, out.best)) out.best = cand;
  }
  if (!IsIncentiveCompatible(inst, out.best.scheme(), 1e-12)) {
    throw std::logic_error("deterministic solver produced a non-IC scheme");
  }
  return out;
}

DetCandidate SolveWithoutInspection(const Instance& inst, double tol) {
  DetCandidate best;
  best.utility = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.size(); ++i) {
    double lo = 0.0;
    double hi = 1.0;
    bool feasible = true;
    for (int j = 0; j < inst.size() && feasible; ++j) {
      if (j == i) continue;
      // alpha * (f(i) - f(j)) >= c(i) - c(j)
      const double slope = inst.prob(i) - inst.prob(j);
      const double rhs = inst.cost(i) - inst.cost(j);
      if (slope > 0.0) {
        lo = std::max(lo, rhs / slope);
      } else if (slope < 0.0) {
        hi = std::min(hi, rhs / slope);
      } else if (rhs > tol) {
        feasible = false;
      }
    }
    if (!feasible || lo > hi + tol) continue;
    const double utility = (1.0 - lo) * inst.prob(i);
    if (utility > best.utility + 1e-12) {
      best = {i, lo, kEmptySet, utility, DetProvenance::kZeroCost, -1};
    }
  }
  return best;
}

}  // namespace icx
