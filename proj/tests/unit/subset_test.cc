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

#include "icx/subset.h"

#include <gtest/gtest.h>

namespace icx {
namespace {

TEST(SubsetTest, BasicOperations) {
  EXPECT_EQ(Singleton(3), Subset{8});
  EXPECT_EQ(FullSet(4), Subset{15});
  EXPECT_TRUE(Contains(Subset{5}, 2));
  EXPECT_FALSE(Contains(Subset{5}, 1));
  EXPECT_EQ(Cardinality(Subset{0b1011}), 3);
  EXPECT_TRUE(IsSubsetOf(Subset{0b0010}, Subset{0b1010}));
  EXPECT_FALSE(IsSubsetOf(Subset{0b0110}, Subset{0b1010}));
}

}  // namespace
}  // namespace icx
