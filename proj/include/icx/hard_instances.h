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

#ifndef ICX_HARD_INSTANCES_H_
#define ICX_HARD_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icx/model.h"

namespace icx {

// ---------------------------------------------------------------------------
// XOS lower-bound family
//
// Actions, in index order: bot (f=0, c=0), g (f=1, c=1/10),
// x (f=3/10, c=1/100), then "1".."k" (f=1/5, c=1/100).
// ---------------------------------------------------------------------------

inline constexpr int kHardBot = 0;
inline constexpr int kHardG = 1;
inline constexpr int kHardX = 2;
inline constexpr int kHardFirstRing = 3;

bool IsPrime(int k);
// ceil(4k / 5).
int DefaultRingSetSize(int k);

struct HardParams {
  int k = 7;
  // Subset of the ring {0, ..., k-1} (element t is action "t+1").
  std::uint32_t T = 0;
  std::optional<int> m_override;

  int m() const { return m_override.value_or(DefaultRingSetSize(k)); }
  bool default_m() const { return !m_override.has_value(); }

  // Validates k prime > 5 and |T| = m(); throws InputError otherwise.
  void Validate() const;
  // T drawn uniformly among size-m() ring subsets.
  static HardParams Random(int k, std::uint64_t seed,
                           std::optional<int> m_override = std::nullopt);
};

// Ring subsets use bits [0, k).
std::uint32_t RotateRing(std::uint32_t set, int shift, int k);
// Numerically smallest bitmask among the k rotations; equal for two sets
// iff one is a rotation of the other.
std::uint32_t CanonicalRotation(std::uint32_t set, int k);
// The distinct cyclic shifts of T, sorted.
std::vector<std::uint32_t> Cyclic(std::uint32_t T, int k);

// Ring part of an action subset: bits of actions "1".."k" shifted to [0, k).
std::uint32_t RingPart(Subset s);
Subset FromRing(std::uint32_t ring);

// Cost function of the family. Demand queries are answered exactly without
// enumeration (see DemandVT).
class XosHardCost final : public SetFunction {
 public:
  explicit XosHardCost(const HardParams& params);

  int size() const override { return params_.k + 3; }
  double Value(Subset s) const override;
  Subset Demand(std::span<const double> prices) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override;

  const HardParams& params() const { return params_; }
  bool IsCyclic(std::uint32_t ring) const;

 private:
  HardParams params_;
  std::uint32_t canonical_T_;
};

Instance GenXosHard(const HardParams& params);

// Exact maximizer of v_T(S) - q(S) with the library's demand tie-breaking.
Subset DemandVT(const HardParams& params, std::span<const double> prices);

// Additive-clause certificate of the XOS property.
class XosCertificate {
 public:
  explicit XosCertificate(const HardParams& params);

  // max over all clauses at S, computed without listing the clauses.
  double MaxClause(Subset s) const;
  // Every clause written out; only sensible for small k (<= 13).
  std::vector<std::vector<double>> ExplicitClauses() const;

 private:
  HardParams params_;
  XosHardCost cost_;
};

// The optimal randomized scheme (g, 1/10, ...) of the family. Requires the
// default ring-set size.
InspectionScheme UniqueOptimalScheme(const HardParams& params);
// 53/60 - 1/(160 |T|).
double UniqueOptimalUtility(const HardParams& params);

struct QueryExperimentReport {
  int k = 0;
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool default_m = true;
  std::uint64_t num_classes = 0;  // C(k, m) / k
  double analytic_mean = 0.0;     // (N + 1) / 2
  double mean = 0.0;
  double median = 0.0;
  std::uint64_t max = 0;
  double asymptotic_bound = 0.0;  // (5/4)^k
  std::vector<std::uint64_t> counts;
};

// Each trial draws T, then queries random size-m sets, one per rotation class
// and without repeating classes, until a member of cyclic(T) is hit. Queries
// go through a CountingOracle. Trial t uses the RNG seeded by (seed, t).
QueryExperimentReport QueryExperiment(int k, int trials, std::uint64_t seed,
                                      std::optional<int> m_override =
                                          std::nullopt);

// ---------------------------------------------------------------------------
// Gap family: bot plus actions "1".."n-1", additive cost n / 2^n per action.
// ---------------------------------------------------------------------------

Instance GenGapInstance(int n);
// (n-1, 1 - n/2^n, {empty: 1/2, {n-1}: 1/2}).
InspectionScheme GapReferenceScheme(const Instance& gap, int n);

// ---------------------------------------------------------------------------
// Three-action example where a non-IC scheme beats every IC scheme.
// ---------------------------------------------------------------------------

struct NonIcExample {
  Instance instance;
  InspectionScheme non_ic_scheme;  // (bot, 1, {{bot}:1/2, {1}:1/4, {}:1/4})
  int agent_choice = 0;            // action "2"
  double non_ic_utility = 0.0;     // 0.425
  double ic_randomized_optimum = 0.0;  // 1.45 - 2 sqrt(0.3)
};

NonIcExample GenNonIcExample();

struct NonIcDeterministicCheck {
  double best_ic = 0.0;        // best deterministic IC utility
  double best_non_ic = 0.0;    // best principal-favored outcome of non-IC ones
  InspectionScheme best_non_ic_scheme;
  int schemes_checked = 0;
};

// Enumerates deterministic schemes (i, alpha, S) over every S and every
// payment at which some agent preference flips (plus 0 and 1), and lets the
// agent best-respond in the principal's favor.
NonIcDeterministicCheck CheckDeterministicNonIc(const Instance& inst);

// Three actions: bot (f=1/10, c=0), b, g with additive inspection costs.
Instance GenIntroExample();

}  // namespace icx

#endif  // ICX_HARD_INSTANCES_H_
