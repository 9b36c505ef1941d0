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

#ifndef ICX_COSTFN_H_
#define ICX_COSTFN_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icx/subset.h"
#include "json.hpp"

namespace icx {

// Inspection cost function v : 2^A -> R>=0 behind a value / demand oracle.
// Implementations are immutable and safe to query concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  // Size of the ground set; subsets use bits [0, size()).
  virtual int size() const = 0;

  virtual double Value(Subset s) const = 0;

  // Returns a set maximizing Value(S) - sum_{j in S} prices[j]. The default
  // enumerates all subsets (see DemandByEnumeration).
  virtual Subset Demand(std::span<const double> prices) const;

  // Serializes to the cost_fn JSON schema. `ids` names each ground element.
  virtual nlohmann::json ToJson(std::span<const std::string> ids) const = 0;
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

// Exhaustive demand oracle. Ties go to the smaller cardinality, then to the
// numerically smaller bitmask. Requires size() <= 20.
Subset DemandByEnumeration(const SetFunction& fn,
                           std::span<const double> prices);

// Demand ordering: higher utility, then fewer elements, then smaller mask.
bool BetterDemand(double u, Subset s, double best_u, Subset best);

// Sum of prices over the elements of `s`, accumulated in index order.
double PriceOf(Subset s, std::span<const double> prices);

// --- Constructors -----------------------------------------------------------

class AdditiveCost final : public SetFunction {
 public:
  explicit AdditiveCost(std::vector<double> weights);
  int size() const override { return static_cast<int>(weights_.size()); }
  double Value(Subset s) const override;
  Subset Demand(std::span<const double> prices) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// min(cap, sum of weights).
class BudgetAdditiveCost final : public SetFunction {
 public:
  BudgetAdditiveCost(std::vector<double> weights, double cap);
  int size() const override { return static_cast<int>(weights_.size()); }
  double Value(Subset s) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override;

 private:
  std::vector<double> weights_;
  double cap_;
};

// Total weight of the union of the universe elements covered by the set.
class WeightedCoverageCost final : public SetFunction {
 public:
  // covers[a] lists the universe elements covered by action a.
  WeightedCoverageCost(std::vector<double> element_weights,
                       std::vector<std::vector<int>> covers);
  int size() const override { return static_cast<int>(covers_.size()); }
  double Value(Subset s) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override;

 private:
  std::vector<double> element_weights_;
  std::vector<std::vector<int>> covers_;
};

// g(|S|) for a nondecreasing concave table g with g[0] = 0.
class ConcaveCardinalityCost final : public SetFunction {
 public:
  explicit ConcaveCardinalityCost(std::vector<double> table);
  int size() const override { return static_cast<int>(table_.size()) - 1; }
  double Value(Subset s) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override;

 private:
  std::vector<double> table_;
};

// Explicit 2^n table indexed by bitmask. Validated normalized and monotone.
class TableCost final : public SetFunction {
 public:
  TableCost(int n, std::vector<double> values);
  // Materializes any set function (n <= 20).
  static std::shared_ptr<TableCost> Materialize(const SetFunction& fn);

  int size() const override { return n_; }
  double Value(Subset s) const override { return values_[s]; }
  nlohmann::json ToJson(std::span<const std::string> ids) const override;

 private:
  int n_;
  std::vector<double> values_;
};

// Pointwise maximum of additive clauses.
class XosCost final : public SetFunction {
 public:
  XosCost(int n, std::vector<std::vector<double>> clauses);
  int size() const override { return n_; }
  double Value(Subset s) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override;
  const std::vector<std::vector<double>>& clauses() const { return clauses_; }

 private:
  int n_;
  std::vector<std::vector<double>> clauses_;
};

// Wraps a set function and counts oracle calls. Answers are forwarded
// unchanged; counters are atomic.
class CountingOracle final : public SetFunction {
 public:
  explicit CountingOracle(SetFunctionPtr inner);

  int size() const override { return inner_->size(); }
  double Value(Subset s) const override;
  Subset Demand(std::span<const double> prices) const override;
  nlohmann::json ToJson(std::span<const std::string> ids) const override {
    return inner_->ToJson(ids);
  }

  std::uint64_t value_queries() const { return value_queries_.load(); }
  std::uint64_t demand_queries() const { return demand_queries_.load(); }
  void Reset();
  const SetFunction& inner() const { return *inner_; }

 private:
  SetFunctionPtr inner_;
  mutable std::atomic<std::uint64_t> value_queries_{0};
  mutable std::atomic<std::uint64_t> demand_queries_{0};
};

// --- Class-membership checkers ----------------------------------------------

struct CheckMode {
  enum class Kind { kExhaustive, kSampled };
  Kind kind = Kind::kExhaustive;
  std::uint64_t seed = 0;
  int count = 0;

  static CheckMode Exhaustive() { return {}; }
  static CheckMode Sampled(std::uint64_t seed, int count) {
    return {Kind::kSampled, seed, count};
  }
};

// A violating configuration. For monotonicity: Value(set | element) <
// Value(set). For submodularity: the marginal of `element` at `set` is
// smaller than at set + `other`.
struct Witness {
  Subset set = 0;
  int element = -1;
  int other = -1;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
};

inline constexpr int kMaxExhaustiveCheck = 16;
inline constexpr int kMaxDemandEnumeration = 20;

CheckResult CheckMonotone(const SetFunction& fn, CheckMode mode,
                          double tol = 1e-12);
CheckResult CheckSubmodular(const SetFunction& fn, CheckMode mode,
                            double tol = 1e-12);

// True iff max over clauses equals Value(S) and no clause exceeds it, for
// every S (within tol).
bool CheckXosPointwise(const SetFunction& fn,
                       const std::vector<std::vector<double>>& clauses,
                       double tol = 1e-12);

// Same check against a clause family given only through its pointwise max
// (for exponentially large certificates).
bool CheckXosPointwise(const SetFunction& fn,
                       const std::function<double(Subset)>& clause_max,
                       double tol = 1e-12);

}  // namespace icx

#endif  // ICX_COSTFN_H_
