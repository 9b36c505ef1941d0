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

#include "icx/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icx/errors.h"
#include "icx/simplex.h"

namespace icx {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvPhi = 0.6180339887498949;

// Cleans LP output noise.
double Clip(double x) { return x < 1e-13 ? 0.0 : x; }

// Fixed-payment LP for one suggested action with all set values cached.
class FixedPaymentLp {
 public:
  FixedPaymentLp(const Instance& inst, int i) : inst_(inst), i_(i) {
    for (int j = 0; j < inst.size(); ++j) {
      if (j != i) others_.push_back(j);
    }
    const int m = static_cast<int>(others_.size());
    const Subset count = Subset{1} << m;
    sets_.reserve(count - 1);
    values_.reserve(count - 1);
    for (Subset local = 1; local < count; ++local) {
      Subset global = 0;
      for (int t = 0; t < m; ++t) {
        if (local & (Subset{1} << t)) global |= Singleton(others_[t]);
      }
      sets_.push_back(global);
      values_.push_back(inst.cost_fn().Value(global));
    }
    v_self_ = inst.cost_fn().Value(Singleton(i));
  }

  FixedPaymentResult Solve(double alpha) const {
    FixedPaymentResult out;
    const double fi = inst_.prob(i_);
    const double ci = inst_.cost(i_);
    if (alpha < 0.0 || alpha > 1.0) return out;
    if (alpha * fi < ci - 1e-15) return out;
    if (alpha <= 0.0) {
      // No payment: IC only if i is already the cheapest action.
      for (int j = 0; j < inst_.size(); ++j) {
        if (inst_.cost(j) < ci) return out;
      }
      out.feasible = true;
      out.objective = 0.0;
      out.scheme = InspectionScheme::Deterministic(i_, 0.0, kEmptySet);
      return out;
    }

    const int vars = static_cast<int>(sets_.size()) + 1;  // last is p_i
    LinearProgram lp;
    lp.objective = values_;
    lp.objective.push_back(v_self_);
    for (int j : others_) {
      const double fj = inst_.prob(j);
      if (fj <= 0.0) continue;
      const double need =
          1.0 - (alpha * fi - ci + inst_.cost(j)) / (alpha * fj);
      if (need <= 0.0) continue;
      std::vector<double> row(vars, 0.0);
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        if (Contains(sets_[s], j)) row[s] = 1.0;
      }
      row[vars - 1] = 1.0;
      lp.AddRow(std::move(row), RowSense::kGreaterEqual, need);
    }
    lp.AddRow(std::vector<double>(vars, 1.0), RowSense::kLessEqual, 1.0);
    const LpSolution sol = SolveLinearProgram(lp);
    if (sol.status != LpStatus::kOptimal) return out;

    out.feasible = true;
    out.objective = alpha * fi + sol.value;
    out.scheme.suggested = i_;
    out.scheme.alpha = alpha;
    double used = 0.0;
    for (int s = 0; s < vars; ++s) {
      const double x = Clip(sol.x[s]);
      if (x == 0.0) continue;
      used += x;
      const Subset set = s + 1 < vars ? sets_[s] : Singleton(i_);
      out.scheme.distribution.push_back({set, x});
    }
    if (used < 1.0) out.scheme.distribution.push_back({kEmptySet, 1.0 - used});
    out.scheme.distribution = Canonicalize(out.scheme.distribution);
    return out;
  }

 private:
  const Instance& inst_;
  int i_;
  std::vector<int> others_;
  std::vector<Subset> sets_;
  std::vector<double> values_;
  double v_self_ = 0.0;
};

// Payments at which the LP's constraint structure can change for action i:
// constraint activation (rhs = 0), saturation (rhs = 1), and equal rhs for
// a pair of actions.
std::vector<double> StructuralAlphas(const Instance& inst, int i) {
  std::vector<double> out;
  const double fi = inst.prob(i);
  const double ci = inst.cost(i);
  for (int j = 0; j < inst.size(); ++j) {
    if (j == i || inst.prob(j) <= 0.0) continue;
    const double fj = inst.prob(j);
    const double cj = inst.cost(j);
    if (fj != fi) out.push_back((cj - ci) / (fj - fi));
    out.push_back((ci - cj) / fi);
    for (int k = j + 1; k < inst.size(); ++k) {
      if (k == i || inst.prob(k) <= 0.0) continue;
      const double fk = inst.prob(k);
      const double ck = inst.cost(k);
      // (a fi - ci + cj) / (a fj) = (a fi - ci + ck) / (a fk)
      const double denom = fi * (fk - fj);
      if (denom != 0.0) out.push_back(((ci - cj) * fk - (ci - ck) * fj) / denom);
    }
  }
  return out;
}

}  // namespace

OracleResult BruteForceDeterministic(const Instance& inst, double tol) {
  const int n = inst.size();
  if (n > kMaxBruteForceDeterministic) {
    throw SizeLimitError("deterministic brute force is limited to 12 actions");
  }
  OracleResult best;
  bool found = false;
  best.utility = -kInf;
  const Subset count = Subset{1} << n;
  for (int i = 0; i < n; ++i) {
    const double fi = inst.prob(i);
    const double ci = inst.cost(i);
    for (Subset s = 0; s < count; ++s) {
      // Feasible payments: lo <= alpha <= hi.
      double lo = 0.0;
      double hi = 1.0;
      for (int j = 0; j < n && lo <= hi + tol; ++j) {
        if (j == i) continue;
        const bool caught = (s & (Singleton(i) | Singleton(j))) != 0;
        const double slope = fi - (caught ? 0.0 : inst.prob(j));
        const double need = ci - inst.cost(j);
        if (slope > 0.0) {
          lo = std::max(lo, need / slope);
        } else if (slope < 0.0) {
          hi = std::min(hi, need / slope);
        } else if (need > tol) {
          lo = kInf;
        }
      }
      if (lo > hi + tol) continue;
      const double alpha = lo;
      const double utility = (1.0 - alpha) * fi - inst.cost_fn().Value(s);
      const bool better =
          !found || utility > best.utility + tol ||
          (utility >= best.utility - tol &&
           Cardinality(s) < Cardinality(best.scheme.distribution[0].set));
      if (better) {
        found = true;
        best.utility = utility;
        best.scheme = InspectionScheme::Deterministic(i, alpha, s);
      }
    }
  }
  return best;
}

CouplingResult LpMinCostGivenMarginals(const std::vector<int>& ground,
                                       const MarginalProfile& marginals,
                                       double mass, const SetFunction& fn) {
  const int m = static_cast<int>(ground.size());
  if (m > kMaxMarginalLpGround) {
    throw SizeLimitError("coupling LP is limited to 10 ground elements");
  }
  double max_marginal = 0.0;
  for (int e : ground) max_marginal = std::max(max_marginal, marginals[e]);
  if (mass < max_marginal - 1e-12) {
    throw InfeasibleError("mass is below the largest marginal");
  }
  const Subset count = Subset{1} << m;
  std::vector<Subset> sets;
  LinearProgram lp;
  for (Subset local = 1; local < count; ++local) {
    Subset global = 0;
    for (int t = 0; t < m; ++t) {
      if (local & (Subset{1} << t)) global |= Singleton(ground[t]);
    }
    sets.push_back(global);
    lp.objective.push_back(fn.Value(global));
  }
  const int vars = static_cast<int>(sets.size());
  for (int e : ground) {
    std::vector<double> row(vars, 0.0);
    for (int s = 0; s < vars; ++s) {
      if (Contains(sets[s], e)) row[s] = 1.0;
    }
    lp.AddRow(std::move(row), RowSense::kEqual, marginals[e]);
  }
  lp.AddRow(std::vector<double>(vars, 1.0), RowSense::kLessEqual, mass);
  const LpSolution sol = SolveLinearProgram(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw InfeasibleError("marginals cannot be realized");
  }
  CouplingResult out;
  out.cost = sol.value;
  double used = 0.0;
  for (int s = 0; s < vars; ++s) {
    const double x = Clip(sol.x[s]);
    if (x == 0.0) continue;
    used += x;
    out.distribution.push_back({sets[s], x});
  }
  if (used < mass) out.distribution.push_back({kEmptySet, mass - used});
  out.distribution = Canonicalize(out.distribution);
  return out;
}

FixedPaymentResult SolveFixedPayment(const Instance& inst, int i,
                                     double alpha) {
  if (inst.size() > 13) {
    throw SizeLimitError("fixed-payment LP is limited to 13 actions");
  }
  return FixedPaymentLp(inst, i).Solve(alpha);
}

OracleResult BruteForceRandomized(const Instance& inst,
                                  const RandomizedOracleOptions& options) {
  const int n = inst.size();
  if (n > kMaxBruteForceRandomized) {
    throw SizeLimitError("randomized brute force is limited to 7 actions");
  }
  OracleResult best;
  best.utility = -kInf;
  bool found = false;
  auto consider = [&](const InspectionScheme& scheme, double utility) {
    if (!found || utility > best.utility + 1e-12) {
      found = true;
      best.scheme = scheme;
      best.utility = utility;
    }
  };

  for (int i = 0; i < n; ++i) {
    const double fi = inst.prob(i);
    const double ci = inst.cost(i);
    if (ci == 0.0) {
      // Zero payment with no inspection is IC for a free action, and no
      // scheme recommending i can do better than f(i).
      const InspectionScheme scheme =
          InspectionScheme::Deterministic(i, 0.0, kEmptySet);
      if (IsIncentiveCompatible(inst, scheme, kDefaultTol)) consider(scheme, fi);
      continue;
    }
    if (fi <= ci) continue;  // utility at most 0, dominated by the null action

    const FixedPaymentLp lp(inst, i);
    const double r = ci / fi;
    std::vector<double> alphas = {r, 1.0};
    for (double a : StructuralAlphas(inst, i)) alphas.push_back(a);
    const double step = std::max(options.alpha_resolution, 1e-7);
    for (double a = r; a < 1.0; a += step) alphas.push_back(a);
    if (i < static_cast<int>(options.extra_alphas.size())) {
      for (double a : options.extra_alphas[i]) alphas.push_back(a);
    }
    std::vector<double> grid;
    for (double a : alphas) {
      if (std::isfinite(a) && a >= r && a <= 1.0) grid.push_back(a);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return b - a < 1e-13; }),
               grid.end());

    std::vector<double> value(grid.size(), kInf);
    auto evaluate = [&](double a) {
      ++best.lp_solves;
      const FixedPaymentResult res = lp.Solve(a);
      if (res.feasible) consider(res.scheme, fi - res.objective);
      return res.feasible ? res.objective : kInf;
    };
    for (std::size_t t = 0; t < grid.size(); ++t) value[t] = evaluate(grid[t]);

    if (!options.refine) continue;
    for (std::size_t t = 0; t < grid.size(); ++t) {
      const double left = t > 0 ? value[t - 1] : kInf;
      const double right = t + 1 < grid.size() ? value[t + 1] : kInf;
      if (!(value[t] <= left && value[t] <= right)) continue;
      double a = grid[t > 0 ? t - 1 : t];
      double b = grid[t + 1 < grid.size() ? t + 1 : t];
      double x1 = b - kInvPhi * (b - a);
      double x2 = a + kInvPhi * (b - a);
      double f1 = evaluate(x1);
      double f2 = evaluate(x2);
      while (b - a > 1e-11) {
        if (f1 <= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - kInvPhi * (b - a);
          f1 = evaluate(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + kInvPhi * (b - a);
          f2 = evaluate(x2);
        }
      }
    }
  }
  if (!found) throw InfeasibleError("no incentive compatible scheme found");
  return best;
}

}  // namespace icx
