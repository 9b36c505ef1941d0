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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <string>

#include "icx/errors.h"

namespace icx {
namespace {

double ParseDecimal(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) {
    ++used;
  }
  if (used != text.size()) throw InputError("not a number: '" + text + "'");
  return value;
}

const json& Field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::map<std::string, int> IndexIds(const std::vector<std::string>& ids) {
  std::map<std::string, int> index;
  for (int a = 0; a < static_cast<int>(ids.size()); ++a) index[ids[a]] = a;
  return index;
}

// Per-action numbers given either as an array in action order or as an
// object keyed by action id (missing ids default to `fill`).
std::vector<double> PerAction(const json& j,
                              const std::vector<std::string>& ids,
                              double fill = 0.0) {
  const int n = static_cast<int>(ids.size());
  std::vector<double> out(n, fill);
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != n) {
      throw InputError("per-action array has wrong length");
    }
    for (int a = 0; a < n; ++a) out[a] = ParseNumber(j[a]);
    return out;
  }
  if (!j.is_object()) throw InputError("expected an object keyed by action id");
  const auto index = IndexIds(ids);
  for (const auto& [key, value] : j.items()) {
    const auto it = index.find(key);
    if (it == index.end()) throw InputError("unknown action id '" + key + "'");
    out[it->second] = ParseNumber(value);
  }
  return out;
}

std::vector<double> Numbers(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(ParseNumber(v));
  return out;
}

}  // namespace

double ParseNumber(const json& value) {
  double out = 0.0;
  if (value.is_number()) {
    out = value.get<double>();
  } else if (value.is_string()) {
    const std::string text = value.get<std::string>();
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      out = ParseDecimal(text);
    } else {
      const double num = ParseDecimal(text.substr(0, slash));
      const double den = ParseDecimal(text.substr(slash + 1));
      if (den == 0.0) throw InputError("zero denominator in '" + text + "'");
      out = num / den;
    }
  } else {
    throw InputError("expected a number or a numeric string");
  }
  if (!std::isfinite(out)) throw InputError("non-finite number");
  return out;
}

SetFunctionPtr ParseCostFunction(const json& j,
                                 const std::vector<std::string>& ids) {
  const int n = static_cast<int>(ids.size());
  const json& type_field = Field(j, "type");
  if (!type_field.is_string()) throw InputError("cost_fn type must be a string");
  const std::string type = type_field.get<std::string>();
  if (type == "additive") {
    return std::make_shared<AdditiveCost>(PerAction(Field(j, "weights"), ids));
  }
  if (type == "budget_additive") {
    return std::make_shared<BudgetAdditiveCost>(
        PerAction(Field(j, "weights"), ids), ParseNumber(Field(j, "cap")));
  }
  if (type == "coverage") {
    std::vector<double> weights = Numbers(Field(j, "element_weights"));
    std::vector<std::vector<int>> covers(n);
    const json& cj = Field(j, "covers");
    const auto index = IndexIds(ids);
    auto elements = [&](const json& list) {
      if (!list.is_array()) throw InputError("covers entry must be an array");
      std::vector<int> out;
      for (const auto& e : list) {
        if (!e.is_number_integer()) throw InputError("cover element must be an integer");
        out.push_back(e.get<int>());
      }
      return out;
    };
    if (cj.is_array()) {
      if (static_cast<int>(cj.size()) != n) throw InputError("covers has wrong length");
      for (int a = 0; a < n; ++a) covers[a] = elements(cj[a]);
    } else if (cj.is_object()) {
      for (const auto& [key, list] : cj.items()) {
        const auto it = index.find(key);
        if (it == index.end()) throw InputError("unknown action id '" + key + "'");
        covers[it->second] = elements(list);
      }
    } else {
      throw InputError("covers must be an array or object");
    }
    return std::make_shared<WeightedCoverageCost>(std::move(weights),
                                                  std::move(covers));
  }
  if (type == "concave_cardinality") {
    std::vector<double> table = Numbers(Field(j, "table"));
    if (static_cast<int>(table.size()) != n + 1) {
      throw InputError("concave_cardinality table needs n+1 entries");
    }
    return std::make_shared<ConcaveCardinalityCost>(std::move(table));
  }
  if (type == "table") {
    std::vector<double> values = Numbers(Field(j, "values"));
    if (n > kMaxDemandEnumeration || values.size() != (std::size_t{1} << n)) {
      throw InputError("table cost needs exactly 2^n values");
    }
    return std::make_shared<TableCost>(n, std::move(values));
  }
  if (type == "xos") {
    const json& cj = Field(j, "clauses");
    if (!cj.is_array()) throw InputError("xos clauses must be an array");
    std::vector<std::vector<double>> clauses;
    for (const auto& clause : cj) clauses.push_back(PerAction(clause, ids));
    return std::make_shared<XosCost>(n, std::move(clauses));
  }
  throw InputError("unknown cost_fn type '" + type + "'");
}

Instance ParseInstance(const json& j) {
  const json& aj = Field(j, "actions");
  if (!aj.is_array()) throw InputError("actions must be an array");
  std::vector<Action> actions;
  std::vector<std::string> ids;
  for (const auto& a : aj) {
    const json& id = Field(a, "id");
    if (!id.is_string()) throw InputError("action id must be a string");
    actions.push_back({id.get<std::string>(), ParseNumber(Field(a, "cost")),
                       ParseNumber(Field(a, "prob"))});
    ids.push_back(actions.back().id);
  }
  const json& null_id = Field(j, "null_id");
  if (!null_id.is_string()) throw InputError("null_id must be a string");
  SetFunctionPtr cost = ParseCostFunction(Field(j, "cost_fn"), ids);
  return Instance(std::move(actions), null_id.get<std::string>(),
                  std::move(cost));
}

Instance ParseInstanceText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return ParseInstance(j);
}

json InstanceToJson(const Instance& inst) {
  json actions = json::array();
  for (const Action& a : inst.actions()) {
    actions.push_back({{"id", a.id}, {"cost", a.cost}, {"prob", a.prob}});
  }
  const std::vector<std::string> ids = inst.ids();
  return {{"actions", actions},
          {"null_id", inst.null_id()},
          {"cost_fn", inst.cost_fn().ToJson(ids)}};
}

json SubsetToJson(const Instance& inst, Subset s) {
  json out = json::array();
  for (int e : Elements(s)) out.push_back(inst.action(e).id);
  return out;
}

Subset ParseSubset(const json& j, const Instance& inst) {
  if (!j.is_array()) throw InputError("set must be an array of action ids");
  Subset s = kEmptySet;
  for (const auto& id : j) {
    if (!id.is_string()) throw InputError("set entries must be action ids");
    const int a = inst.IndexOf(id.get<std::string>());
    if (Contains(s, a)) throw InputError("repeated action id in set");
    s |= Singleton(a);
  }
  return s;
}

InspectionScheme ParseScheme(const json& j, const Instance& inst) {
  const json& suggested = Field(j, "suggested");
  if (!suggested.is_string()) throw InputError("suggested must be an action id");
  InspectionScheme scheme;
  scheme.suggested = inst.IndexOf(suggested.get<std::string>());
  scheme.alpha = ParseNumber(Field(j, "alpha"));
  const json& dist = Field(j, "distribution");
  if (!dist.is_array()) throw InputError("distribution must be an array");
  for (const auto& entry : dist) {
    scheme.distribution.push_back(
        {ParseSubset(Field(entry, "set"), inst), ParseNumber(Field(entry, "prob"))});
  }
  ValidateScheme(inst, scheme);
  return scheme;
}

json SchemeToJson(const Instance& inst, const InspectionScheme& scheme) {
  json dist = json::array();
  for (const WeightedSet& ws : Canonicalize(scheme.distribution)) {
    dist.push_back({{"set", SubsetToJson(inst, ws.set)}, {"prob", ws.prob}});
  }
  return {{"suggested", inst.action(scheme.suggested).id},
          {"alpha", scheme.alpha},
          {"distribution", dist}};
}

std::string CanonicalText(const json& j) { return j.dump(); }

std::string InstanceDigest(const Instance& inst) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : CanonicalText(InstanceToJson(inst))) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace icx
