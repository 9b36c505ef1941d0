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

#include "icx/io.h"

#include <gtest/gtest.h>

#include "icx/errors.h"
#include "icx/hard_instances.h"

namespace icx {
namespace {

TEST(IoTest, ParseNumberForms) {
  EXPECT_DOUBLE_EQ(ParseNumber(json(0.25)), 0.25);
  EXPECT_DOUBLE_EQ(ParseNumber(json("0.25")), 0.25);
  EXPECT_DOUBLE_EQ(ParseNumber(json("3/8")), 0.375);
  EXPECT_THROW(ParseNumber(json("1/0")), InputError);
  EXPECT_THROW(ParseNumber(json("abc")), InputError);
  EXPECT_THROW(ParseNumber(json::array()), InputError);
}

TEST(IoTest, InstanceRoundTrip) {
  const Instance inst = GenIntroExample();
  const json j = InstanceToJson(inst);
  const Instance back = ParseInstance(j);
  EXPECT_EQ(InstanceDigest(back), InstanceDigest(inst));
  EXPECT_EQ(CanonicalText(InstanceToJson(back)), CanonicalText(j));
}

TEST(IoTest, TableCostByIdAndArray) {
  const char* text = R"({
    "actions": [{"id": "bot", "cost": 0, "prob": 0},
                {"id": "a", "cost": "1/10", "prob": 1}],
    "null_id": "bot",
    "cost_fn": {"type": "table", "values": [0, 0.1, 0.2, 0.25]}})";
  const Instance inst = ParseInstanceText(text);
  EXPECT_DOUBLE_EQ(inst.cost(1), 0.1);
  EXPECT_DOUBLE_EQ(inst.cost_fn().Value(0b11), 0.25);
}

TEST(IoTest, ErrorsAreClassified) {
  const char* missing_null = R"({
    "actions": [{"id": "a", "cost": 0, "prob": 1}], "null_id": "bot",
    "cost_fn": {"type": "additive", "weights": [0.1]}})";
  EXPECT_THROW(ParseInstanceText(missing_null), ValidationError);
  const char* bad_type = R"({
    "actions": [{"id": "bot", "cost": 0, "prob": 1}], "null_id": "bot",
    "cost_fn": {"type": "mystery"}})";
  EXPECT_THROW(ParseInstanceText(bad_type), InputError);
  const char* non_monotone = R"({
    "actions": [{"id": "bot", "cost": 0, "prob": 0},
                {"id": "a", "cost": 0, "prob": 1}], "null_id": "bot",
    "cost_fn": {"type": "table", "values": [0, 0.5, 0.2, 0.1]}})";
  EXPECT_THROW(ParseInstanceText(non_monotone), ValidationError);
}

TEST(IoTest, SchemeRoundTripAndUnknownIds) {
  const Instance inst = GenIntroExample();
  const InspectionScheme s{2, 0.375, {{kEmptySet, 2.0 / 3}, {Singleton(2), 1.0 / 3}}};
  const InspectionScheme back = ParseScheme(SchemeToJson(inst, s), inst);
  EXPECT_EQ(back.suggested, 2);
  ASSERT_EQ(back.distribution.size(), 2u);
  EXPECT_DOUBLE_EQ(back.distribution[1].prob, 1.0 / 3);

  json bad = SchemeToJson(inst, s);
  bad["suggested"] = "nope";
  EXPECT_THROW(ParseScheme(bad, inst), InputError);
}

TEST(IoTest, DigestIsStableAndSensitive) {
  const Instance a = GenGapInstance(6);
  const Instance b = GenGapInstance(7);
  EXPECT_EQ(InstanceDigest(a), InstanceDigest(GenGapInstance(6)));
  EXPECT_NE(InstanceDigest(a), InstanceDigest(b));
  EXPECT_EQ(InstanceDigest(a).size(), 16u);
}

}  // namespace
}  // namespace icx
