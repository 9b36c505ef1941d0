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

#include "icx/rand_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "icx/errors.h"

namespace icx {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Masses below this are floating-point residue, not part of the scheme.
constexpr double kNoiseMass = 1e-12;
constexpr double kFeasTol = 1e-12;

// h(alpha) = a + b / alpha: the value of p_i that makes eta_j vanish.
struct Curve {
  double a = 0.0;
  double b = 0.0;
  double operator()(double alpha) const { return a + b / alpha; }
};

Curve ZeroEtaCurve(const Instance& inst, int i, int j) {
  const double fi = inst.prob(i);
  const double fj = inst.prob(j);
  return {1.0 - fi / fj, (inst.cost(i) - inst.cost(j)) / fj};
}

// Per-interval data shared by every k: the eta curves in order and the
// values of the order's suffix sets.
struct IntervalContext {
  int i = 0;
  double fi = 0.0;
  double self_cost = 0.0;           // v({i})
  double lo = 0.0;                  // max(c_l, c(i)/f(i))
  double hi = 0.0;                  // c_{l+1}
  int num_unconstrained = 0;
  std::vector<Curve> curves;        // by order position
  std::vector<double> suffix_cost;  // w_t, with w_m = 0
};

IntervalContext MakeContext(const Instance& inst,
                            const IntervalPartition& partition, int interval) {
  const int i = partition.suggested;
  const std::vector<int>& order = partition.orders[interval];
  const int m = static_cast<int>(order.size());
  IntervalContext ctx;
  ctx.i = i;
  ctx.fi = inst.prob(i);
  ctx.self_cost = inst.cost_fn().Value(Singleton(i));
  ctx.lo = std::max(partition.cutpoints[interval], inst.cost(i) / inst.prob(i));
  ctx.hi = partition.cutpoints[interval + 1];
  ctx.num_unconstrained = partition.num_unconstrained;
  ctx.curves.resize(m);
  ctx.suffix_cost.assign(m + 1, 0.0);
  Subset suffix = kEmptySet;
  for (int t = m - 1; t >= 0; --t) {
    suffix |= Singleton(order[t]);
    if (t >= ctx.num_unconstrained) {
      ctx.curves[t] = ZeroEtaCurve(inst, i, order[t]);
      ctx.suffix_cost[t] = inst.cost_fn().Value(suffix);
    }
  }
  return ctx;
}

SubproblemResult Solve(const IntervalContext& ctx, int interval, int k) {
  SubproblemResult out;
  out.suggested = ctx.i;
  out.interval = interval;
  out.k = k;
  const int m = static_cast<int>(ctx.curves.size());
  if (k < ctx.num_unconstrained || k > m || ctx.lo > ctx.hi) return out;

  const bool has_lower = k - 1 >= ctx.num_unconstrained;
  const bool has_upper = k < m;
  const Curve lower_curve = has_lower ? ctx.curves[k - 1] : Curve{};
  const Curve upper_curve = has_upper ? ctx.curves[k] : Curve{};

  // Objective: fi * alpha + base_a + base_d / alpha + gamma * p_i.
  double base_a = 0.0;
  double base_d = 0.0;
  for (int t = k; t < m; ++t) {
    const double dw = ctx.suffix_cost[t] - ctx.suffix_cost[t + 1];
    base_a += dw * ctx.curves[t].a;
    base_d += dw * ctx.curves[t].b;
  }
  const double gamma = ctx.self_cost - ctx.suffix_cost[k];
  const bool take_lower = gamma >= 0.0;

  auto lower = [&](double alpha) {
    return has_lower ? std::max(0.0, lower_curve(alpha)) : 0.0;
  };
  auto upper = [&](double alpha) {
    return has_upper ? std::min(1.0, upper_curve(alpha)) : 1.0;
  };

  // Payments where a p_i bound switches between its constant and its curve.
  std::vector<double> points = {ctx.lo, ctx.hi};
  auto add_crossings = [&](const Curve& curve) {
    for (double level : {0.0, 1.0}) {
      if (curve.a == level) continue;
      const double alpha = curve.b / (level - curve.a);
      if (alpha > ctx.lo && alpha < ctx.hi) points.push_back(alpha);
    }
  };
  if (has_lower) add_crossings(lower_curve);
  if (has_upper) add_crossings(upper_curve);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // On each piece p_i follows a constant or one curve, so the objective is
  // fi * alpha + const + d / alpha with a closed-form stationary point.
  std::vector<double> candidates = points;
  for (size_t s = 0; s + 1 < points.size(); ++s) {
    const double mid = 0.5 * (points[s] + points[s + 1]);
    double d = base_d;
    if (take_lower && has_lower && lower_curve(mid) > 0.0) {
      d += gamma * lower_curve.b;
    } else if (!take_lower && has_upper && upper_curve(mid) < 1.0) {
      d += gamma * upper_curve.b;
    }
    if (d > 0.0) {
      const double stationary = std::sqrt(d / ctx.fi);
      if (stationary > points[s] && stationary < points[s + 1]) {
        candidates.push_back(stationary);
        out.stationary_alphas.push_back(stationary);
      }
    }
  }

  double best = kInf;
  for (double alpha : candidates) {
    const double lo = lower(alpha);
    const double hi = upper(alpha);
    if (lo > hi + kFeasTol) continue;
    double p = take_lower ? lo : hi;
    p = std::clamp(p, 0.0, 1.0);
    const double value =
        ctx.fi * alpha + base_a + base_d / alpha + gamma * p;
    if (value < best || (value == best && alpha < out.alpha)) {
      best = value;
      out.alpha = alpha;
      out.p_i = p;
      out.feasible = true;
    }
  }
  out.objective = out.feasible ? best : kInf;
  return out;
}

}  // namespace

double NestedDistribution::ExpectedCost(const SetFunction& fn) const {
  double sum = 0.0;
  for (const WeightedSet& level : levels) {
    if (level.prob > 0.0) sum += level.prob * fn.Value(level.set);
  }
  return sum;
}

std::vector<WeightedSet> NestedDistribution::Support() const {
  std::vector<WeightedSet> out;
  for (const WeightedSet& level : levels) {
    if (level.prob > 0.0) out.push_back(level);
  }
  if (empty_mass > 0.0) out.push_back({kEmptySet, empty_mass});
  return Canonicalize(std::move(out));
}

NestedDistribution NestedMinCostDistribution(const std::vector<int>& ground,
                                             const MarginalProfile& marginals,
                                             double mass) {
  NestedDistribution out;
  out.ground = ground;
  for (int e : ground) {
    if (e < 0 || e >= static_cast<int>(marginals.size()) || e >= kMaxActions) {
      throw InputError("ground element without a marginal");
    }
    const double q = marginals[e];
    if (!(q >= -kFeasTol && q <= 1.0 + kFeasTol)) {
      throw InputError("marginal outside [0,1]");
    }
  }
  auto marginal = [&](int e) { return std::clamp(marginals[e], 0.0, 1.0); };
  std::stable_sort(out.ground.begin(), out.ground.end(), [&](int a, int b) {
    if (marginal(a) != marginal(b)) return marginal(a) < marginal(b);
    return a < b;
  });
  const int m = static_cast<int>(out.ground.size());
  std::vector<Subset> suffix(m + 1, kEmptySet);
  for (int t = m - 1; t >= 0; --t) {
    suffix[t] = suffix[t + 1] | Singleton(out.ground[t]);
  }
  double previous = 0.0;
  for (int t = 0; t < m; ++t) {
    const double q = marginal(out.ground[t]);
    out.levels.push_back({suffix[t], q - previous});
    previous = q;
  }
  const double empty = mass - previous;
  if (empty < -kFeasTol) {
    throw InfeasibleError("total mass is below the largest marginal");
  }
  out.empty_mass = std::max(0.0, empty);
  return out;
}

double Eta(const Instance& inst, int i, int j, double alpha, double p_i) {
  if (!(inst.prob(j) > 0.0)) {
    throw InputError("eta is undefined for actions with zero success prob");
  }
  if (!(alpha > 0.0)) throw InputError("eta requires a positive payment");
  return 1.0 - p_i -
         (alpha * inst.prob(i) - inst.cost(i) + inst.cost(j)) /
             (alpha * inst.prob(j));
}

IntervalPartition Breakpoints(const Instance& inst, int i) {
  const double fi = inst.prob(i);
  const double ci = inst.cost(i);
  if (!(fi > ci && ci > 0.0)) {
    throw InputError("breakpoints require f(i) > c(i) > 0");
  }
  IntervalPartition out;
  out.suggested = i;
  std::vector<int> unconstrained;
  std::vector<int> constrained;
  for (int j = 0; j < inst.size(); ++j) {
    if (j == i) continue;
    (inst.prob(j) > 0.0 ? constrained : unconstrained).push_back(j);
  }
  out.num_unconstrained = static_cast<int>(unconstrained.size());

  std::vector<double> cuts;
  for (size_t x = 0; x < constrained.size(); ++x) {
    for (size_t y = x + 1; y < constrained.size(); ++y) {
      const int j = constrained[x];
      const int jp = constrained[y];
      const double fj = inst.prob(j);
      const double fjp = inst.prob(jp);
      if (fj == fjp) continue;
      const double alpha =
          ((ci - inst.cost(j)) * fjp - (ci - inst.cost(jp)) * fj) /
          ((fjp - fj) * fi);
      if (alpha > 0.0 && alpha < 1.0) cuts.push_back(alpha);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  out.cutpoints.push_back(0.0);
  for (double c : cuts) {
    if (c - out.cutpoints.back() > 1e-12) out.cutpoints.push_back(c);
  }
  if (1.0 - out.cutpoints.back() <= 1e-12 && out.cutpoints.size() > 1) {
    out.cutpoints.pop_back();
  }
  out.cutpoints.push_back(1.0);

  for (size_t l = 0; l + 1 < out.cutpoints.size(); ++l) {
    const double mid = 0.5 * (out.cutpoints[l] + out.cutpoints[l + 1]);
    std::vector<std::pair<double, int>> keyed;
    for (int j : constrained) {
      keyed.emplace_back(ZeroEtaCurve(inst, i, j)(mid), j);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order = unconstrained;
    for (const auto& [h, j] : keyed) order.push_back(j);
    out.orders.push_back(std::move(order));
  }
  return out;
}

SubproblemResult SolveSubproblem(const Instance& inst,
                                 const IntervalPartition& partition,
                                 int interval, int k) {
  if (interval < 0 || interval >= partition.num_intervals()) {
    throw InputError("interval index out of range");
  }
  return Solve(MakeContext(inst, partition, interval), interval, k);
}

InspectionScheme AssembleScheme(const Instance& inst,
                                const IntervalPartition& partition,
                                const SubproblemResult& result) {
  if (!result.feasible) throw InputError("cannot assemble infeasible result");
  const int i = partition.suggested;
  const std::vector<int>& order = partition.orders[result.interval];
  MarginalProfile marginals(inst.size(), 0.0);
  for (int t = result.k; t < static_cast<int>(order.size()); ++t) {
    const int j = order[t];
    const double eta = Eta(inst, i, j, result.alpha, result.p_i);
    marginals[j] = eta < kNoiseMass ? 0.0 : eta;
  }
  const NestedDistribution nested =
      NestedMinCostDistribution(order, marginals, 1.0 - result.p_i);
  InspectionScheme scheme{i, result.alpha, nested.Support()};
  if (result.p_i > 0.0) scheme.distribution.push_back({Singleton(i), result.p_i});
  // Rounding leftovers from near-equal marginals go to the empty set.
  double dropped = 0.0;
  for (WeightedSet& ws : scheme.distribution) {
    if (ws.set != kEmptySet && ws.prob < kNoiseMass) {
      dropped += ws.prob;
      ws.prob = 0.0;
    }
  }
  if (dropped > 0.0) scheme.distribution.push_back({kEmptySet, dropped});
  scheme.distribution = Canonicalize(std::move(scheme.distribution));
  if (!IsIncentiveCompatible(inst, scheme, 1e-9)) {
    throw std::logic_error("assembled randomized scheme is not IC");
  }
  return scheme;
}

RandSolution SolveRandomized(const Instance& inst) {
  RandSolution out;
  out.stationary_alphas.resize(inst.size());
  double best_utility = -kInf;
  int best_action = -1;
  std::optional<IntervalPartition> best_partition;

  for (int i = 0; i < inst.size(); ++i) {
    const double fi = inst.prob(i);
    const double ci = inst.cost(i);
    if (ci == 0.0) {
      if (fi > best_utility + 1e-12) {
        best_utility = fi;
        best_action = i;
        best_partition.reset();
        out.winner.reset();
      }
      continue;
    }
    if (fi <= ci) continue;

    IntervalPartition partition = Breakpoints(inst, i);
    std::optional<SubproblemResult> local;
    for (int l = 0; l < partition.num_intervals(); ++l) {
      const IntervalContext ctx = MakeContext(inst, partition, l);
      const int m = static_cast<int>(ctx.curves.size());
      for (int k = ctx.num_unconstrained; k <= m; ++k) {
        SubproblemResult r = Solve(ctx, l, k);
        ++out.subproblems_solved;
        auto& harvested = out.stationary_alphas[i];
        harvested.insert(harvested.end(), r.stationary_alphas.begin(),
                         r.stationary_alphas.end());
        if (!r.feasible) continue;
        if (!local || r.objective < local->objective - 1e-15 ||
            (r.objective <= local->objective + 1e-15 &&
             r.alpha < local->alpha)) {
          local = std::move(r);
        }
      }
    }
    if (!local) continue;
    const double utility = fi - local->objective;
    if (utility > best_utility + 1e-12) {
      best_utility = utility;
      best_action = i;
      out.winner = local;
      best_partition = std::move(partition);
    }
  }

  if (out.winner) {
    out.scheme = AssembleScheme(inst, *best_partition, *out.winner);
  } else {
    out.scheme = {best_action, 0.0, {{kEmptySet, 1.0}}};
  }
  const int i = out.scheme.suggested;
  out.payment = out.scheme.alpha * inst.prob(i);
  out.inspection_cost = ExpectedInspectionCost(inst, out.scheme);
  out.utility = PrincipalUtility(inst, out.scheme, i);
  return out;
}

}  // namespace icx
