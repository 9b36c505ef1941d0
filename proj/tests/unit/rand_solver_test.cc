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

#include <gtest/gtest.h>

#include <cmath>

#include "icx/det_solver.h"
#include "icx/errors.h"
#include "icx/hard_instances.h"

namespace icx {
namespace {

TEST(RandSolverTest, IntroOptimum) {
  const Instance inst = GenIntroExample();
  const RandSolution sol = SolveRandomized(inst);
  EXPECT_NEAR(sol.utility, 71.0 / 120, 1e-9);
  EXPECT_TRUE(IsIncentiveCompatible(inst, sol.scheme, 1e-12));
  EXPECT_EQ(sol.scheme.suggested, 2);
  EXPECT_NEAR(sol.scheme.alpha, 3.0 / 8, 1e-9);
  EXPECT_NEAR(sol.payment + sol.inspection_cost, 1 - sol.utility, 1e-12);
}

TEST(RandSolverTest, NonIcExampleClosedForm) {
  const NonIcExample ex = GenNonIcExample();
  EXPECT_NEAR(SolveRandomized(ex.instance).utility, 1.45 - 2 * std::sqrt(0.3),
              1e-9);
}

TEST(RandSolverTest, EtaFormula) {
  const Instance inst = GenIntroExample();
  // 1 - 0 - (0.5 - 0.35 + 0.1) / (0.5 * 0.5)
  EXPECT_NEAR(Eta(inst, 2, 1, 0.5, 0.0), 0.0, 1e-15);
  EXPECT_THROW(Eta(inst, 2, 1, 0.0, 0.0), InputError);
}

TEST(RandSolverTest, NestedDistributionHasChainSupport) {
  const std::vector<int> ground = {0, 2, 3};
  const MarginalProfile q = {0.5, 0.0, 0.2, 0.5};
  const NestedDistribution d = NestedMinCostDistribution(ground, q, 1.0);
  const auto support = d.Support();
  ASSERT_EQ(support.size(), 3u);
  // Empty 0.5, {0,3} 0.3, {0,2,3} 0.2, sorted by mask.
  EXPECT_EQ(support[0].set, kEmptySet);
  EXPECT_NEAR(support[0].prob, 0.5, 1e-15);
  EXPECT_EQ(support[1].set, Subset{0b1001});
  EXPECT_NEAR(support[1].prob, 0.3, 1e-15);
  EXPECT_EQ(support[2].set, Subset{0b1101});
}

TEST(RandSolverTest, NestedDistributionRejectsSmallMass) {
  const MarginalProfile q = {0.8, 0.3};
  EXPECT_THROW(NestedMinCostDistribution({0, 1}, q, 0.5), InfeasibleError);
}

TEST(RandSolverTest, BreakpointsPartitionUnitInterval) {
  const Instance inst = GenIntroExample();
  const IntervalPartition p = Breakpoints(inst, 2);
  ASSERT_GE(p.cutpoints.size(), 2u);
  EXPECT_EQ(p.cutpoints.front(), 0.0);
  EXPECT_EQ(p.cutpoints.back(), 1.0);
  EXPECT_EQ(p.num_intervals() + 1, static_cast<int>(p.cutpoints.size()));
}

TEST(RandSolverTest, AtLeastDeterministicOnGapFamily) {
  const Instance inst = GenGapInstance(8);
  EXPECT_GE(SolveRandomized(inst).utility,
            SolveDeterministic(inst).best.utility - 1e-12);
}

}  // namespace
}  // namespace icx
