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

#include "icx/costfn.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "icx/errors.h"

namespace icx {
namespace {

void RequireNonnegative(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError(std::string(what) + " must be finite and >= 0");
    }
  }
}

nlohmann::json KeyedWeights(std::span<const std::string> ids,
                            const std::vector<double>& weights) {
  nlohmann::json out = nlohmann::json::object();
  for (size_t a = 0; a < weights.size(); ++a) out[ids[a]] = weights[a];
  return out;
}

}  // namespace

bool BetterDemand(double u, Subset s, double best_u, Subset best) {
  if (u != best_u) return u > best_u;
  if (Cardinality(s) != Cardinality(best)) {
    return Cardinality(s) < Cardinality(best);
  }
  return s < best;
}

double PriceOf(Subset s, std::span<const double> prices) {
  double sum = 0.0;
  for (int e : Elements(s)) sum += prices[e];
  return sum;
}

Subset DemandByEnumeration(const SetFunction& fn,
                           std::span<const double> prices) {
  const int n = fn.size();
  if (n > kMaxDemandEnumeration) {
    throw SizeLimitError("demand enumeration limited to 20 elements");
  }
  if (static_cast<int>(prices.size()) != n) {
    throw InputError("price vector has wrong length");
  }
  Subset best = kEmptySet;
  double best_u = 0.0;
  const Subset end = Subset{1} << n;
  for (Subset s = 1; s < end; ++s) {
    const double u = fn.Value(s) - PriceOf(s, prices);
    if (BetterDemand(u, s, best_u, best)) {
      best_u = u;
      best = s;
    }
  }
  return best;
}

Subset SetFunction::Demand(std::span<const double> prices) const {
  return DemandByEnumeration(*this, prices);
}

// --- AdditiveCost -----------------------------------------------------------

AdditiveCost::AdditiveCost(std::vector<double> weights)
    : weights_(std::move(weights)) {
  RequireNonnegative(weights_, "additive weights");
}

double AdditiveCost::Value(Subset s) const {
  double sum = 0.0;
  for (int e : Elements(s)) sum += weights_[e];
  return sum;
}

Subset AdditiveCost::Demand(std::span<const double> prices) const {
  if (prices.size() != weights_.size()) {
    throw InputError("price vector has wrong length");
  }
  Subset out = kEmptySet;
  for (int a = 0; a < size(); ++a) {
    if (weights_[a] > prices[a]) out |= Singleton(a);
  }
  return out;
}

nlohmann::json AdditiveCost::ToJson(std::span<const std::string> ids) const {
  return {{"type", "additive"}, {"weights", KeyedWeights(ids, weights_)}};
}

// --- BudgetAdditiveCost -----------------------------------------------------

BudgetAdditiveCost::BudgetAdditiveCost(std::vector<double> weights, double cap)
    : weights_(std::move(weights)), cap_(cap) {
  RequireNonnegative(weights_, "budget-additive weights");
  if (!(cap_ >= 0.0)) throw ValidationError("budget cap must be >= 0");
}

double BudgetAdditiveCost::Value(Subset s) const {
  double sum = 0.0;
  for (int e : Elements(s)) sum += weights_[e];
  return std::min(cap_, sum);
}

nlohmann::json BudgetAdditiveCost::ToJson(
    std::span<const std::string> ids) const {
  return {{"type", "budget_additive"},
          {"weights", KeyedWeights(ids, weights_)},
          {"cap", cap_}};
}

// --- WeightedCoverageCost ---------------------------------------------------

WeightedCoverageCost::WeightedCoverageCost(
    std::vector<double> element_weights, std::vector<std::vector<int>> covers)
    : element_weights_(std::move(element_weights)),
      covers_(std::move(covers)) {
  RequireNonnegative(element_weights_, "coverage element weights");
  const int universe = static_cast<int>(element_weights_.size());
  for (const auto& cover : covers_) {
    for (int u : cover) {
      if (u < 0 || u >= universe) {
        throw ValidationError("coverage element out of universe range");
      }
    }
  }
}

double WeightedCoverageCost::Value(Subset s) const {
  std::vector<char> covered(element_weights_.size(), 0);
  for (int e : Elements(s)) {
    for (int u : covers_[e]) covered[u] = 1;
  }
  double sum = 0.0;
  for (size_t u = 0; u < covered.size(); ++u) {
    if (covered[u]) sum += element_weights_[u];
  }
  return sum;
}

nlohmann::json WeightedCoverageCost::ToJson(
    std::span<const std::string> ids) const {
  nlohmann::json covers = nlohmann::json::object();
  for (size_t a = 0; a < covers_.size(); ++a) covers[ids[a]] = covers_[a];
  return {{"type", "coverage"},
          {"element_weights", element_weights_},
          {"covers", covers}};
}

// --- ConcaveCardinalityCost -------------------------------------------------

ConcaveCardinalityCost::ConcaveCardinalityCost(std::vector<double> table)
    : table_(std::move(table)) {
  if (table_.empty() || table_[0] != 0.0) {
    throw ValidationError("concave cardinality table must start with 0");
  }
  RequireNonnegative(table_, "concave cardinality table");
  for (size_t t = 1; t < table_.size(); ++t) {
    if (table_[t] < table_[t - 1]) {
      throw ValidationError("concave cardinality table must be nondecreasing");
    }
    if (t >= 2 &&
        table_[t] - table_[t - 1] > table_[t - 1] - table_[t - 2] + 1e-12) {
      throw ValidationError("concave cardinality table must be concave");
    }
  }
}

double ConcaveCardinalityCost::Value(Subset s) const {
  return table_[Cardinality(s)];
}

nlohmann::json ConcaveCardinalityCost::ToJson(
    std::span<const std::string>) const {
  return {{"type", "concave_cardinality"}, {"table", table_}};
}

// --- TableCost --------------------------------------------------------------

TableCost::TableCost(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 0 || n_ > kMaxDemandEnumeration) {
    throw ValidationError("table cost limited to 20 elements");
  }
  if (values_.size() != (size_t{1} << n_)) {
    throw ValidationError("table cost needs exactly 2^n values");
  }
  RequireNonnegative(values_, "table values");
  if (values_[0] != 0.0) throw ValidationError("table cost not normalized");
  for (Subset s = 0; s < values_.size(); ++s) {
    for (int e = 0; e < n_; ++e) {
      if (!Contains(s, e) && values_[s | Singleton(e)] < values_[s]) {
        throw ValidationError("table cost not monotone");
      }
    }
  }
}

std::shared_ptr<TableCost> TableCost::Materialize(const SetFunction& fn) {
  const int n = fn.size();
  if (n > kMaxDemandEnumeration) {
    throw SizeLimitError("materialization limited to 20 elements");
  }
  std::vector<double> values(size_t{1} << n);
  for (Subset s = 0; s < values.size(); ++s) values[s] = fn.Value(s);
  return std::make_shared<TableCost>(n, std::move(values));
}

nlohmann::json TableCost::ToJson(std::span<const std::string>) const {
  return {{"type", "table"}, {"values", values_}};
}

// --- XosCost ----------------------------------------------------------------

XosCost::XosCost(int n, std::vector<std::vector<double>> clauses)
    : n_(n), clauses_(std::move(clauses)) {
  for (const auto& clause : clauses_) {
    if (static_cast<int>(clause.size()) != n_) {
      throw ValidationError("XOS clause has wrong length");
    }
    RequireNonnegative(clause, "XOS clause weights");
  }
}

double XosCost::Value(Subset s) const {
  double best = 0.0;
  for (const auto& clause : clauses_) {
    double sum = 0.0;
    for (int e : Elements(s)) sum += clause[e];
    best = std::max(best, sum);
  }
  return best;
}

nlohmann::json XosCost::ToJson(std::span<const std::string> ids) const {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& clause : clauses_) {
    clauses.push_back(KeyedWeights(ids, clause));
  }
  return {{"type", "xos"}, {"clauses", clauses}};
}

// --- CountingOracle ---------------------------------------------------------

CountingOracle::CountingOracle(SetFunctionPtr inner)
    : inner_(std::move(inner)) {
  if (inner_ == nullptr) throw InputError("null set function");
}

double CountingOracle::Value(Subset s) const {
  value_queries_.fetch_add(1, std::memory_order_relaxed);
  return inner_->Value(s);
}

Subset CountingOracle::Demand(std::span<const double> prices) const {
  demand_queries_.fetch_add(1, std::memory_order_relaxed);
  return inner_->Demand(prices);
}

void CountingOracle::Reset() {
  value_queries_.store(0);
  demand_queries_.store(0);
}

// --- Checkers ---------------------------------------------------------------

namespace {

void RequireExhaustiveSize(int n) {
  if (n > kMaxExhaustiveCheck) {
    throw SizeLimitError("exhaustive checks limited to 16 elements");
  }
}

// Draws a random subset avoiding the given elements.
Subset RandomSubset(std::mt19937_64& rng, int n, Subset avoid) {
  std::uniform_int_distribution<Subset> dist(0, FullSet(n));
  return dist(rng) & ~avoid;
}

}  // namespace

CheckResult CheckMonotone(const SetFunction& fn, CheckMode mode, double tol) {
  const int n = fn.size();
  auto violates = [&](Subset s, int e) {
    return fn.Value(s | Singleton(e)) < fn.Value(s) - tol;
  };
  if (mode.kind == CheckMode::Kind::kExhaustive) {
    RequireExhaustiveSize(n);
    const Subset end = Subset{1} << n;
    for (Subset s = 0; s < end; ++s) {
      for (int e = 0; e < n; ++e) {
        if (!Contains(s, e) && violates(s, e)) {
          return {false, Witness{s, e, -1}};
        }
      }
    }
    return {};
  }
  if (n == 0) return {};
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < mode.count; ++t) {
    const int e = pick(rng);
    const Subset s = RandomSubset(rng, n, Singleton(e));
    if (violates(s, e)) return {false, Witness{s, e, -1}};
  }
  return {};
}

CheckResult CheckSubmodular(const SetFunction& fn, CheckMode mode,
                            double tol) {
  const int n = fn.size();
  auto violates = [&](Subset s, int i, int j) {
    const Subset sj = s | Singleton(j);
    const double at_s = fn.Value(s | Singleton(i)) - fn.Value(s);
    const double at_sj = fn.Value(sj | Singleton(i)) - fn.Value(sj);
    return at_s < at_sj - tol;
  };
  if (mode.kind == CheckMode::Kind::kExhaustive) {
    RequireExhaustiveSize(n);
    const Subset end = Subset{1} << n;
    for (Subset s = 0; s < end; ++s) {
      for (int i = 0; i < n; ++i) {
        if (Contains(s, i)) continue;
        for (int j = 0; j < n; ++j) {
          if (j == i || Contains(s, j)) continue;
          if (violates(s, i, j)) return {false, Witness{s, i, j}};
        }
      }
    }
    return {};
  }
  if (n < 2) return {};
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < mode.count; ++t) {
    const int i = pick(rng);
    int j = pick(rng);
    if (j == i) j = (j + 1) % n;
    const Subset s = RandomSubset(rng, n, Singleton(i) | Singleton(j));
    if (violates(s, i, j)) return {false, Witness{s, i, j}};
  }
  return {};
}

bool CheckXosPointwise(const SetFunction& fn,
                       const std::vector<std::vector<double>>& clauses,
                       double tol) {
  const int n = fn.size();
  RequireExhaustiveSize(n);
  for (const auto& clause : clauses) {
    if (static_cast<int>(clause.size()) != n) {
      throw InputError("XOS clause has wrong length");
    }
  }
  const Subset end = Subset{1} << n;
  for (Subset s = 0; s < end; ++s) {
    const double value = fn.Value(s);
    double best = 0.0;
    for (const auto& clause : clauses) {
      double sum = 0.0;
      for (int e : Elements(s)) sum += clause[e];
      if (sum > value + tol) return false;
      best = std::max(best, sum);
    }
    if (std::abs(best - value) > tol) return false;
  }
  return true;
}

bool CheckXosPointwise(const SetFunction& fn,
                       const std::function<double(Subset)>& clause_max,
                       double tol) {
  const int n = fn.size();
  RequireExhaustiveSize(n);
  const Subset end = Subset{1} << n;
  for (Subset s = 0; s < end; ++s) {
    if (std::abs(clause_max(s) - fn.Value(s)) > tol) return false;
  }
  return true;
}

}  // namespace icx
