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

#include "icx/simplex.h"

#include <gtest/gtest.h>

#include "icx/errors.h"

namespace icx {
namespace {

TEST(SimplexTest, SmallMinimization) {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6.
  LinearProgram lp;
  lp.objective = {-1.0, -1.0};
  lp.AddRow({1.0, 2.0}, RowSense::kLessEqual, 4.0);
  lp.AddRow({3.0, 1.0}, RowSense::kLessEqual, 6.0);
  const LpSolution sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.value, -2.8, 1e-12);
  EXPECT_NEAR(sol.x[0], 1.6, 1e-12);
  EXPECT_NEAR(sol.x[1], 1.2, 1e-12);
}

TEST(SimplexTest, EqualityAndGreaterRows) {
  // min 2x + 3y  s.t. x + y = 1, x >= 0.25.
  LinearProgram lp;
  lp.objective = {2.0, 3.0};
  lp.AddRow({1.0, 1.0}, RowSense::kEqual, 1.0);
  lp.AddRow({1.0, 0.0}, RowSense::kGreaterEqual, 0.25);
  const LpSolution sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.value, 2.0, 1e-12);
}

TEST(SimplexTest, DetectsInfeasibility) {
  LinearProgram lp;
  lp.objective = {1.0};
  lp.AddRow({1.0}, RowSense::kLessEqual, 1.0);
  lp.AddRow({1.0}, RowSense::kGreaterEqual, 2.0);
  EXPECT_EQ(SolveLinearProgram(lp).status, LpStatus::kInfeasible);
}

TEST(SimplexTest, DetectsUnboundedness) {
  LinearProgram lp;
  lp.objective = {-1.0, 0.0};
  lp.AddRow({1.0, -1.0}, RowSense::kLessEqual, 1.0);
  EXPECT_EQ(SolveLinearProgram(lp).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, NegativeRightHandSide) {
  // -x <= -3 means x >= 3.
  LinearProgram lp;
  lp.objective = {1.0};
  lp.AddRow({-1.0}, RowSense::kLessEqual, -3.0);
  const LpSolution sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.x[0], 3.0, 1e-12);
}

TEST(SimplexTest, DegenerateProblemTerminates) {
  LinearProgram lp;
  lp.objective = {-0.75, 150.0, -0.02, 6.0};
  lp.AddRow({0.25, -60.0, -0.04, 9.0}, RowSense::kLessEqual, 0.0);
  lp.AddRow({0.5, -90.0, -0.02, 3.0}, RowSense::kLessEqual, 0.0);
  lp.AddRow({0.0, 0.0, 1.0, 0.0}, RowSense::kLessEqual, 1.0);
  const LpSolution sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.value, -0.05, 1e-12);
}

TEST(SimplexTest, RejectsMismatchedRows) {
  LinearProgram lp;
  lp.objective = {1.0, 1.0};
  lp.AddRow({1.0}, RowSense::kLessEqual, 1.0);
  EXPECT_THROW(SolveLinearProgram(lp), InputError);
}

}  // namespace
}  // namespace icx
