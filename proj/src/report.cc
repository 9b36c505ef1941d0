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

#include "icx/report.h"

#include <chrono>
#include <cmath>
#include <memory>

#include "icx/det_solver.h"
#include "icx/errors.h"
#include "icx/oracle.h"
#include "icx/rand_solver.h"

namespace icx {
namespace {

CheckMode ModeFor(int n, std::uint64_t seed, int samples) {
  return n <= kMaxExhaustiveCheck ? CheckMode::Exhaustive()
                                  : CheckMode::Sampled(seed, samples);
}

json WitnessToJson(const Instance& inst, const CheckResult& r) {
  if (r.ok || !r.witness) return nullptr;
  json w = {{"set", SubsetToJson(inst, r.witness->set)},
            {"element", inst.action(r.witness->element).id}};
  if (r.witness->other >= 0) w["other"] = inst.action(r.witness->other).id;
  return w;
}

void RequireMonotone(const Instance& inst) {
  const CheckResult r =
      CheckMonotone(inst.cost_fn(), ModeFor(inst.size(), 1, 20000));
  if (!r.ok) throw ValidationError("inspection cost is not monotone");
}

// Returns "verified" or "unverified"; throws CostClassError on failure.
std::string RequireSubmodular(const Instance& inst) {
  if (inst.size() > kMaxCostClassCheck) return "unverified";
  if (!CheckSubmodular(inst.cost_fn(), CheckMode::Exhaustive()).ok) {
    throw CostClassError("randomized mode needs a submodular inspection cost");
  }
  return "verified";
}

json Decomposition(const Instance& inst, const InspectionScheme& scheme) {
  const int i = scheme.suggested;
  const double payment = scheme.alpha * inst.prob(i);
  const double inspection = ExpectedInspectionCost(inst, scheme);
  return {{"success_prob", inst.prob(i)},
          {"payment", payment},
          {"inspection_cost", inspection}};
}

json DetCandidateToJson(const Instance& inst, const DetCandidate& c) {
  json out = {{"suggested", inst.action(c.suggested).id},
              {"alpha", c.alpha},
              {"inspected", SubsetToJson(inst, c.inspected)},
              {"utility", c.utility},
              {"provenance", ToString(c.provenance)}};
  if (c.pair_action >= 0) out["pair_action"] = inst.action(c.pair_action).id;
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

json Header(const Instance& inst, SolveMode mode) {
  return {{"tool", "icx"},
          {"version", kToolVersion},
          {"instance_digest", InstanceDigest(inst)},
          {"mode", ToString(mode)}};
}

struct SolverRun {
  InspectionScheme scheme;
  double utility = 0.0;
  std::vector<std::vector<double>> stationary_alphas;
};

SolverRun RunSolver(const Instance& inst, SolveMode mode) {
  if (mode == SolveMode::kDeterministic) {
    const DetSolution sol = SolveDeterministic(inst);
    return {sol.best.scheme(), sol.best.utility, {}};
  }
  RandSolution sol = SolveRandomized(inst);
  return {sol.scheme, sol.utility, std::move(sol.stationary_alphas)};
}

double CompareTolerance(SolveMode mode) {
  return mode == SolveMode::kDeterministic ? 1e-9 : 1e-4;
}

OracleResult RunOracle(const Instance& inst, SolveMode mode,
                       const ReportSettings& settings,
                       std::vector<std::vector<double>> extra_alphas) {
  if (mode == SolveMode::kDeterministic) return BruteForceDeterministic(inst);
  RandomizedOracleOptions options;
  options.alpha_resolution = settings.alpha_grid;
  options.extra_alphas = std::move(extra_alphas);
  return BruteForceRandomized(inst, options);
}

}  // namespace

SolveMode ParseSolveMode(const std::string& text) {
  if (text == "det") return SolveMode::kDeterministic;
  if (text == "rand") return SolveMode::kRandomized;
  throw InputError("mode must be 'det' or 'rand'");
}

std::string ToString(SolveMode mode) {
  return mode == SolveMode::kDeterministic ? "det" : "rand";
}

json SolveReport(const Instance& base, SolveMode mode,
                 const ReportSettings& settings) {
  RequireMonotone(base);
  std::string cost_class = "any_monotone";
  if (mode == SolveMode::kRandomized) cost_class = RequireSubmodular(base);

  auto counter = std::make_shared<CountingOracle>(base.cost_fn_ptr());
  const Instance inst = base.WithCostFunction(counter);
  const Timer timer;
  json report = Header(base, mode);
  report["cost_class"] = cost_class;

  InspectionScheme scheme;
  double utility = 0.0;
  if (mode == SolveMode::kDeterministic) {
    const DetSolution sol = SolveDeterministic(inst);
    scheme = sol.best.scheme();
    utility = sol.best.utility;
    json candidates = json::array();
    for (const DetCandidate& c : sol.candidates) {
      candidates.push_back(DetCandidateToJson(inst, c));
    }
    report["provenance"] = {{"winner", DetCandidateToJson(inst, sol.best)},
                            {"candidates", candidates}};
  } else {
    const RandSolution sol = SolveRandomized(inst);
    scheme = sol.scheme;
    utility = sol.utility;
    json provenance = {{"subproblems_solved", sol.subproblems_solved}};
    if (sol.winner) {
      provenance["winner"] = {{"suggested", inst.action(sol.winner->suggested).id},
                              {"interval", sol.winner->interval},
                              {"k", sol.winner->k},
                              {"alpha", sol.winner->alpha},
                              {"p_i", sol.winner->p_i}};
    } else {
      provenance["winner"] = "zero_cost_action";
    }
    report["provenance"] = provenance;
  }
  const double elapsed = timer.Seconds();

  report["scheme"] = SchemeToJson(inst, scheme);
  report["utility"] = utility;
  report["decomposition"] = Decomposition(base, scheme);
  report["ic"] = IsIncentiveCompatible(base, scheme, settings.tol);
  report["queries"] = {{"value", counter->value_queries()},
                       {"demand", counter->demand_queries()}};
  if (settings.timing) report["wall_clock_seconds"] = elapsed;
  return report;
}

json EvalReport(const Instance& inst, const InspectionScheme& scheme,
                const ReportSettings& settings) {
  ValidateScheme(inst, scheme);
  json agents = json::object();
  json principal = json::object();
  json marginals = json::object();
  for (int j = 0; j < inst.size(); ++j) {
    const std::string& id = inst.action(j).id;
    agents[id] = AgentUtility(inst, scheme, j);
    principal[id] = PrincipalUtility(inst, scheme, j);
    marginals[id] = Marginal(inst, scheme, j);
  }
  json best = json::array();
  for (int j : BestResponses(inst, scheme, settings.tol)) {
    best.push_back(inst.action(j).id);
  }
  const int favored = PrincipalFavoredResponse(inst, scheme, settings.tol);
  const int i = scheme.suggested;
  return {{"tool", "icx"},
          {"version", kToolVersion},
          {"instance_digest", InstanceDigest(inst)},
          {"scheme", SchemeToJson(inst, scheme)},
          {"agent_utilities", agents},
          {"principal_utilities", principal},
          {"marginals", marginals},
          {"best_responses", best},
          {"ic", IsIncentiveCompatible(inst, scheme, settings.tol)},
          {"suggested_principal_utility", PrincipalUtility(inst, scheme, i)},
          {"principal_favored_response", inst.action(favored).id},
          {"principal_favored_utility", PrincipalUtility(inst, scheme, favored)},
          {"decomposition", Decomposition(inst, scheme)},
          {"tolerance", settings.tol}};
}

json CompareReport(const Instance& inst, SolveMode mode,
                   const ReportSettings& settings) {
  const int limit = mode == SolveMode::kDeterministic
                        ? kMaxBruteForceDeterministic
                        : kMaxBruteForceRandomized;
  if (inst.size() > limit) {
    throw SizeLimitError("instance exceeds the oracle size limit of " +
                         std::to_string(limit) + " actions");
  }
  RequireMonotone(inst);
  if (mode == SolveMode::kRandomized) RequireSubmodular(inst);
  SolverRun solver = RunSolver(inst, mode);
  const OracleResult oracle =
      RunOracle(inst, mode, settings, std::move(solver.stationary_alphas));
  const double gap = std::abs(solver.utility - oracle.utility);
  const double tol = CompareTolerance(mode);
  json report = Header(inst, mode);
  report["solver"] = {{"utility", solver.utility},
                      {"scheme", SchemeToJson(inst, solver.scheme)}};
  report["oracle"] = {{"utility", oracle.utility},
                      {"scheme", SchemeToJson(inst, oracle.scheme)}};
  report["gap"] = gap;
  report["tolerance"] = tol;
  report["pass"] = gap <= tol;
  return report;
}

json BruteForceReport(const Instance& inst, SolveMode mode,
                      const ReportSettings& settings) {
  RequireMonotone(inst);
  const OracleResult oracle = RunOracle(inst, mode, settings, {});
  json report = Header(inst, mode);
  report["scheme"] = SchemeToJson(inst, oracle.scheme);
  report["utility"] = oracle.utility;
  report["decomposition"] = Decomposition(inst, oracle.scheme);
  if (mode == SolveMode::kRandomized) report["lp_solves"] = oracle.lp_solves;
  return report;
}

json CheckCostFnReport(const Instance& inst, std::uint64_t seed, int samples) {
  const CheckMode mode = ModeFor(inst.size(), seed, samples);
  const CheckResult mono = CheckMonotone(inst.cost_fn(), mode);
  const CheckResult sub = CheckSubmodular(inst.cost_fn(), mode);
  return {{"tool", "icx"},
          {"version", kToolVersion},
          {"instance_digest", InstanceDigest(inst)},
          {"n", inst.size()},
          {"check", mode.kind == CheckMode::Kind::kExhaustive ? "exhaustive"
                                                              : "sampled"},
          {"normalized", inst.cost_fn().Value(kEmptySet) == 0.0},
          {"monotone", mono.ok},
          {"monotone_witness", WitnessToJson(inst, mono)},
          {"submodular", sub.ok},
          {"submodular_witness", WitnessToJson(inst, sub)}};
}

json QueryExperimentToJson(const QueryExperimentReport& r) {
  return {{"tool", "icx"},
          {"version", kToolVersion},
          {"k", r.k},
          {"m", r.m},
          {"trials", r.trials},
          {"seed", r.seed},
          {"default_m", r.default_m},
          {"rotation_classes", r.num_classes},
          {"analytic_mean", r.analytic_mean},
          {"mean", r.mean},
          {"median", r.median},
          {"max", r.max},
          {"asymptotic_bound_5_4_pow_k", r.asymptotic_bound},
          {"counts", r.counts}};
}

}  // namespace icx
