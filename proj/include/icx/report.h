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

#ifndef ICX_REPORT_H_
#define ICX_REPORT_H_

#include <string>

#include "icx/hard_instances.h"
#include "icx/io.h"

namespace icx {

inline constexpr const char* kToolVersion = "0.1.0";

enum class SolveMode { kDeterministic, kRandomized };

// Parses "det" / "rand"; throws InputError otherwise.
SolveMode ParseSolveMode(const std::string& text);
std::string ToString(SolveMode mode);

struct ReportSettings {
  double tol = kDefaultTol;        // IC / comparison tolerance
  double alpha_grid = 1e-4;        // randomized oracle grid resolution
  bool timing = false;             // include wall-clock (breaks byte identity)
};

// Largest n for which the randomized solver verifies submodularity before
// running; beyond it reports carry "cost_class": "unverified".
inline constexpr int kMaxCostClassCheck = 10;

// Runs a solver on the instance. Throws ValidationError for a non-monotone
// cost and CostClassError for a non-submodular cost in randomized mode.
json SolveReport(const Instance& inst, SolveMode mode,
                 const ReportSettings& settings = {});

// Agent utility of every action, best responses, IC verdict and principal
// utilities for a given scheme.
json EvalReport(const Instance& inst, const InspectionScheme& scheme,
                const ReportSettings& settings = {});

// Solver against brute-force oracle. Throws SizeLimitError when the
// instance exceeds the oracle's limits.
json CompareReport(const Instance& inst, SolveMode mode,
                   const ReportSettings& settings = {});

json BruteForceReport(const Instance& inst, SolveMode mode,
                      const ReportSettings& settings = {});

// Monotonicity and submodularity (exhaustive up to 16 actions, sampled
// beyond) with witnesses.
json CheckCostFnReport(const Instance& inst, std::uint64_t seed = 1,
                       int samples = 20000);

json QueryExperimentToJson(const QueryExperimentReport& report);

}  // namespace icx

#endif  // ICX_REPORT_H_
