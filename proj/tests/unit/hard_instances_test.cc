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

#include "icx/hard_instances.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "icx/errors.h"
#include "icx/oracle.h"

namespace icx {
namespace {

TEST(HardInstancesTest, PrimesAndSizes) {
  EXPECT_TRUE(IsPrime(7));
  EXPECT_TRUE(IsPrime(13));
  EXPECT_FALSE(IsPrime(9));
  EXPECT_EQ(DefaultRingSetSize(7), 6);
  EXPECT_EQ(DefaultRingSetSize(13), 11);
}

TEST(HardInstancesTest, ValidationRejectsBadRings) {
  EXPECT_THROW(HardParams::Random(9, 1), InputError);
  EXPECT_THROW(HardParams::Random(5, 1), InputError);
  HardParams p{7, 0b111, std::nullopt};
  EXPECT_THROW(p.Validate(), InputError);
}

TEST(HardInstancesTest, RotationsAndCanonicalForm) {
  EXPECT_EQ(RotateRing(0b0000011, 1, 7), 0b0000110u);
  EXPECT_EQ(RotateRing(0b1000001, 1, 7), 0b0000011u);
  EXPECT_EQ(CanonicalRotation(0b1100000, 7), 0b0000011u);
  EXPECT_EQ(Cyclic(0b0111111, 7).size(), 7u);
  EXPECT_EQ(FromRing(RingPart(Singleton(kHardFirstRing + 2))),
            Singleton(kHardFirstRing + 2));
}

TEST(HardInstancesTest, ValuesOfTheFamily) {
  const HardParams p = HardParams::Random(7, 4);
  const XosHardCost cost(p);
  EXPECT_EQ(cost.Value(kEmptySet), 0.0);
  EXPECT_DOUBLE_EQ(cost.Value(Singleton(kHardX)), 1.0 / 40);
  EXPECT_DOUBLE_EQ(cost.Value(Singleton(kHardG)), 1.0);
  const Subset t = FromRing(p.T);
  EXPECT_TRUE(cost.IsCyclic(p.T));
  EXPECT_LT(cost.Value(t), cost.Value(FromRing(RotateRing(p.T, 1, 7)) |
                                     Singleton(kHardFirstRing)) + 1.0);
}

TEST(HardInstancesTest, UniqueSchemeIsOptimalAndTight) {
  const HardParams p = HardParams::Random(7, 2);
  const Instance inst = GenXosHard(p);
  const InspectionScheme it = UniqueOptimalScheme(p);
  EXPECT_TRUE(IsIncentiveCompatible(inst, it, 1e-12));
  EXPECT_NEAR(PrincipalUtility(inst, it, kHardG), UniqueOptimalUtility(p),
              1e-12);
  EXPECT_NEAR(UniqueOptimalUtility(p), 847.0 / 960, 1e-15);
}

TEST(HardInstancesTest, DemandMatchesEnumeration) {
  const HardParams p = HardParams::Random(7, 5);
  const XosHardCost cost(p);
  std::vector<double> q(cost.size(), 0.0);
  for (int a = kHardFirstRing; a < cost.size(); ++a) q[a] = 0.001 * a;
  EXPECT_EQ(DemandVT(p, q), DemandByEnumeration(cost, q));
  std::fill(q.begin(), q.end(), 0.0);
  EXPECT_EQ(DemandVT(p, q), DemandByEnumeration(cost, q));
}

TEST(HardInstancesTest, GapReference) {
  const Instance inst = GenGapInstance(10);
  const InspectionScheme ref = GapReferenceScheme(inst, 10);
  EXPECT_TRUE(IsIncentiveCompatible(inst, ref, 1e-12));
  EXPECT_EQ(PrincipalUtility(inst, ref, ref.suggested), 10.0 / 2048);
}

TEST(HardInstancesTest, QueryExperimentIsReproducible) {
  const auto a = QueryExperiment(7, 50, 3);
  const auto b = QueryExperiment(7, 50, 3);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.num_classes, 1u);
  for (auto c : a.counts) EXPECT_EQ(c, 1u);
}

TEST(HardInstancesTest, NonIcDeterministicCheck) {
  const NonIcExample ex = GenNonIcExample();
  const NonIcDeterministicCheck c = CheckDeterministicNonIc(ex.instance);
  EXPECT_NEAR(c.best_ic, 1.0 / 3, 1e-12);
  EXPECT_LE(c.best_non_ic, c.best_ic + 1e-12);
}

TEST(HardInstancesTest, DemandExamples) {
  const HardParams p = HardParams::Random(7, 6);
  const int n = p.k + 3;
  std::vector<double> q(n, 2.0);
  EXPECT_EQ(DemandVT(p, q), kEmptySet);
  q[kHardX] = 0.0;
  for (int a = kHardFirstRing; a < n; ++a) q[a] = 1.0;
  EXPECT_EQ(DemandVT(p, q), Singleton(kHardX));

}

TEST(HardInstancesTest, DemandPicksNonCyclicRingSet) {
  // At k = 7 every size-m set is a rotation of T, so use k = 11. Tiny
  // uniform ring prices make a size-m set outside cyclic(T) optimal.
  const HardParams p = HardParams::Random(11, 6);
  const XosHardCost cost(p);
  std::vector<double> q(cost.size(), 5.0);
  for (int a = kHardFirstRing; a < cost.size(); ++a) q[a] = 1e-6;
  const Subset d = DemandVT(p, q);
  EXPECT_EQ(std::popcount(RingPart(d)), p.m());
  EXPECT_FALSE(cost.IsCyclic(RingPart(d)));
  EXPECT_EQ(d, DemandByEnumeration(cost, q));
}

TEST(HardInstancesTest, OptimalSchemeMarginals) {
  const HardParams p = HardParams::Random(7, 8);
  const Instance inst = GenXosHard(p);
  const InspectionScheme it = UniqueOptimalScheme(p);
  EXPECT_NEAR(Marginal(inst, it, kHardX), 2.0 / 3, 1e-15);
  for (int a = kHardFirstRing; a < inst.size(); ++a) {
    EXPECT_NEAR(Marginal(inst, it, a), 0.5, 1e-15);
  }
  for (int j = 0; j < inst.size(); ++j) {
    EXPECT_NEAR(AgentUtility(inst, it, j), 0.0, 1e-12);
  }
}

TEST(HardInstancesTest, CyclicShiftsCoverEachElementUniformly) {
  for (int k : {7, 11, 13}) {
    const HardParams p = HardParams::Random(k, 21);
    const auto shifts = Cyclic(p.T, k);
    ASSERT_EQ(static_cast<int>(shifts.size()), k);
    for (int e = 0; e < k; ++e) {
      int hits = 0;
      for (auto s : shifts) hits += (s >> e) & 1;
      EXPECT_EQ(hits, p.m());
    }
  }
}

TEST(HardInstancesTest, LargerRingsAreMonotoneOnSamples) {
  for (int k : {11, 13}) {
    const XosHardCost cost(HardParams::Random(k, 2));
    EXPECT_EQ(cost.Value(kEmptySet), 0.0);
    EXPECT_TRUE(CheckMonotone(cost, CheckMode::Sampled(4, 20000)).ok);
  }
}

TEST(HardInstancesTest, GapInstanceRows) {
  const Instance inst = GenGapInstance(10);
  ASSERT_EQ(inst.size(), 10);
  EXPECT_EQ(inst.prob(9), 1.0);
  EXPECT_EQ(inst.cost(9), (1024.0 - 10) / 1024);
  EXPECT_EQ(inst.cost_fn().Value(Singleton(4)), 10.0 / 1024);
}

}  // namespace
}  // namespace icx
