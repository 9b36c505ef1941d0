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

#ifndef ICX_IO_H_
#define ICX_IO_H_

#include <string>
#include <vector>

#include "icx/model.h"
#include "json.hpp"

namespace icx {

using nlohmann::json;

// Accepts a JSON number or a string holding a decimal or a fraction "p/q".
// Throws InputError otherwise.
double ParseNumber(const json& value);

// Parse errors (missing fields, wrong types, unknown ids) throw InputError;
// semantic violations (non-monotone table, bad null action) throw
// ValidationError.
SetFunctionPtr ParseCostFunction(const json& j,
                                 const std::vector<std::string>& ids);
Instance ParseInstance(const json& j);
Instance ParseInstanceText(const std::string& text);

json InstanceToJson(const Instance& inst);

json SubsetToJson(const Instance& inst, Subset s);
Subset ParseSubset(const json& j, const Instance& inst);

// Validates the result; unknown ids and malformed distributions throw
// InputError.
InspectionScheme ParseScheme(const json& j, const Instance& inst);
json SchemeToJson(const Instance& inst, const InspectionScheme& scheme);

// Compact dump with sorted keys; identical instances give identical text.
std::string CanonicalText(const json& j);
// 64-bit FNV-1a of the canonical instance text, as 16 hex digits.
std::string InstanceDigest(const Instance& inst);

}  // namespace icx

#endif  // ICX_IO_H_
