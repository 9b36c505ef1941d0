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

#include <gtest/gtest.h>

#include <memory>
#include <vector>

#include "../common/generators.h"
#include "icx/errors.h"

namespace icx {
namespace {

TEST(CostFnTest, AdditiveValueAndDemand) {
  const AdditiveCost fn({0.1, 0.2, 0.4});
  EXPECT_DOUBLE_EQ(fn.Value(0b101), 0.5);
  const std::vector<double> prices = {0.05, 0.3, 0.4};
  // Element 2 ties at zero surplus and is left out.
  EXPECT_EQ(fn.Demand(prices), Subset{0b001});
  EXPECT_EQ(DemandByEnumeration(fn, prices), Subset{0b001});
}

TEST(CostFnTest, BudgetAdditiveCapsTheSum) {
  const BudgetAdditiveCost fn({0.3, 0.3, 0.3}, 0.5);
  EXPECT_DOUBLE_EQ(fn.Value(0b001), 0.3);
  EXPECT_DOUBLE_EQ(fn.Value(0b111), 0.5);
  EXPECT_TRUE(CheckSubmodular(fn, CheckMode::Exhaustive()).ok);
}

TEST(CostFnTest, CoverageCountsUnionOnce) {
  const WeightedCoverageCost fn({1.0, 2.0, 4.0}, {{0, 1}, {1, 2}, {}});
  EXPECT_DOUBLE_EQ(fn.Value(0b001), 3.0);
  EXPECT_DOUBLE_EQ(fn.Value(0b011), 7.0);
  EXPECT_DOUBLE_EQ(fn.Value(0b100), 0.0);
}

TEST(CostFnTest, ConcaveCardinality) {
  const ConcaveCardinalityCost fn({0.0, 0.5, 0.8, 0.9});
  EXPECT_EQ(fn.size(), 3);
  EXPECT_DOUBLE_EQ(fn.Value(0b110), 0.8);
  EXPECT_TRUE(CheckSubmodular(fn, CheckMode::Exhaustive()).ok);
}

TEST(CostFnTest, TableRejectsNonMonotoneValues) {
  EXPECT_THROW(TableCost(2, {0.0, 0.5, 0.2, 0.4}), ValidationError);
  EXPECT_THROW(TableCost(1, {0.1, 0.5}), ValidationError);
  EXPECT_NO_THROW(TableCost(2, {0.0, 0.5, 0.2, 0.6}));
}

TEST(CostFnTest, XosIsMaxOfClauses) {
  const XosCost fn(2, {{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.6}});
  EXPECT_DOUBLE_EQ(fn.Value(0b01), 1.0);
  EXPECT_DOUBLE_EQ(fn.Value(0b11), 1.2);
  EXPECT_TRUE(CheckXosPointwise(fn, fn.clauses()));
}

TEST(CostFnTest, SupermodularTableHasWitness) {
  // v({0}) = v({1}) = 0.1, v({0,1}) = 1: the marginal of 0 grows.
  const TableCost fn(2, {0.0, 0.1, 0.1, 1.0});
  EXPECT_TRUE(CheckMonotone(fn, CheckMode::Exhaustive()).ok);
  const CheckResult r = CheckSubmodular(fn, CheckMode::Exhaustive());
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->set, kEmptySet);
  EXPECT_NE(r.witness->element, r.witness->other);
}

TEST(CostFnTest, SampledCheckFindsViolation) {
  const TableCost fn(2, {0.0, 0.1, 0.1, 1.0});
  EXPECT_FALSE(CheckSubmodular(fn, CheckMode::Sampled(3, 500)).ok);
}

TEST(CostFnTest, CountingOracleCountsAndForwards) {
  auto inner = std::make_shared<AdditiveCost>(std::vector<double>{0.1, 0.2});
  CountingOracle counter(inner);
  EXPECT_DOUBLE_EQ(counter.Value(0b11), inner->Value(0b11));
  counter.Value(0b01);
  const std::vector<double> prices = {0.0, 0.0};
  counter.Demand(prices);
  EXPECT_EQ(counter.value_queries(), 2u);
  EXPECT_EQ(counter.demand_queries(), 1u);
  counter.Reset();
  EXPECT_EQ(counter.value_queries(), 0u);
}

TEST(CostFnTest, DemandTieBreaking) {
  // Fewer elements first, then the smaller mask.
  EXPECT_TRUE(BetterDemand(1.0, 0b100, 1.0, 0b011));
  EXPECT_TRUE(BetterDemand(1.0, 0b001, 1.0, 0b010));
  EXPECT_FALSE(BetterDemand(0.5, 0b001, 1.0, 0b010));
}

TEST(CostFnTest, RandomSubmodularFamiliesPassTheCheck) {
  testing::Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto kind = static_cast<testing::SubmodularKind>(t % 4);
    const SetFunctionPtr fn = testing::RandomSubmodular(5, rng, kind);
    EXPECT_TRUE(CheckMonotone(*fn, CheckMode::Exhaustive()).ok);
    EXPECT_TRUE(CheckSubmodular(*fn, CheckMode::Exhaustive()).ok);
  }
}

}  // namespace
}  // namespace icx
