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

#include "icx/model.h"

#include <gtest/gtest.h>

#include <memory>

#include "icx/errors.h"
#include "icx/hard_instances.h"

namespace icx {
namespace {

Instance Intro() { return GenIntroExample(); }

TEST(ModelTest, RejectsMissingNullAction) {
  auto fn = std::make_shared<AdditiveCost>(std::vector<double>{0.1, 0.1});
  EXPECT_THROW(Instance({{"a", 0.0, 0.5}, {"b", 0.1, 1.0}}, "bot", fn),
               ValidationError);
}

TEST(ModelTest, UtilitiesOfADeterministicScheme) {
  const Instance inst = Intro();
  // Suggest g (index 2), pay 0.4, inspect {g}.
  const auto s = InspectionScheme::Deterministic(2, 0.4, Singleton(2));
  EXPECT_NEAR(AgentUtility(inst, s, 2), 0.4 - 0.35, 1e-15);
  EXPECT_NEAR(PrincipalUtility(inst, s, 2), 0.6 - 0.1, 1e-15);
  // Deviating to b is caught because {g} meets {g, b}.
  EXPECT_DOUBLE_EQ(CaughtProbability(s, 1), 1.0);
}

TEST(ModelTest, NoInspectionSchemeAtSeventeenTwentiethsIsNotIc) {
  const Instance inst = Intro();
  const InspectionScheme s{2, 0.35, {{kEmptySet, 1.0}}};
  EXPECT_FALSE(IsIncentiveCompatible(inst, s, 1e-9));
}

TEST(ModelTest, ValidateSchemeCatchesBadDistributions) {
  const Instance inst = Intro();
  EXPECT_THROW(ValidateScheme(inst, {2, 0.5, {{kEmptySet, 0.7}}}), InputError);
  EXPECT_THROW(ValidateScheme(inst, {2, 1.5, {{kEmptySet, 1.0}}}), InputError);
  EXPECT_THROW(ValidateScheme(inst, {2, 0.5, {{Singleton(5), 1.0}}}),
               InputError);
  EXPECT_NO_THROW(ValidateScheme(inst, {2, 0.5, {{kEmptySet, 1.0}}}));
}

TEST(ModelTest, MarginalsSumOverContainingSets) {
  const Instance inst = Intro();
  const InspectionScheme s{
      2, 0.5, {{0b011, 0.25}, {0b010, 0.25}, {kEmptySet, 0.5}}};
  EXPECT_DOUBLE_EQ(Marginal(inst, s, 0), 0.25);
  EXPECT_DOUBLE_EQ(Marginal(inst, s, 1), 0.5);
  EXPECT_DOUBLE_EQ(Marginal(inst, s, 2), 0.0);
}

TEST(ModelTest, NormalizationKeepsAgentUtilities) {
  const Instance inst = Intro();
  const InspectionScheme s{2, 0.5, {{0b110, 0.3}, {0b011, 0.2}, {0b000, 0.5}}};
  const InspectionScheme norm = NormalizeScheme(inst, s);
  for (int j = 0; j < inst.size(); ++j) {
    EXPECT_NEAR(AgentUtility(inst, s, j), AgentUtility(inst, norm, j), 1e-15);
  }
  EXPECT_GE(PrincipalUtility(inst, norm, 2), PrincipalUtility(inst, s, 2));
}

TEST(ModelTest, CanonicalizeMergesAndSorts) {
  const auto out = Canonicalize({{0b10, 0.2}, {0b01, 0.3}, {0b10, 0.1},
                                 {0b11, 0.0}});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].set, Subset{0b01});
  EXPECT_DOUBLE_EQ(out[1].prob, 0.2 + 0.1);
}

TEST(ModelTest, FavoredResponseBreaksTiesForThePrincipal) {
  const NonIcExample ex = GenNonIcExample();
  const auto best = BestResponses(ex.instance, ex.non_ic_scheme, 1e-9);
  EXPECT_EQ(best.size(), 3u);
  EXPECT_EQ(PrincipalFavoredResponse(ex.instance, ex.non_ic_scheme, 1e-9),
            ex.agent_choice);
  EXPECT_NEAR(PrincipalUtility(ex.instance, ex.non_ic_scheme, ex.agent_choice),
              0.425, 1e-12);
}

}  // namespace
}  // namespace icx
