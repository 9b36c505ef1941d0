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

#ifndef ICX_TESTS_COMMON_GENERATORS_H_
#define ICX_TESTS_COMMON_GENERATORS_H_

// Seeded random instances shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "icx/costfn.h"
#include "icx/model.h"

namespace icx::testing {

using Rng = std::mt19937_64;

// Uniform in [lo, hi). With dyadic = true the value is a multiple of 1/64,
// which makes exact ties between candidate payments likely.
inline double Draw(Rng& rng, double lo, double hi, bool dyadic = false) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double x = u(rng);
  return dyadic ? std::floor(x * 64.0) / 64.0 : x;
}

// Random normalized monotone table: v(S) = max over one-smaller subsets plus
// a nonnegative increment (zero with probability 1/4).
inline std::shared_ptr<TableCost> RandomMonotoneTable(int n, Rng& rng,
                                                      bool dyadic = false) {
  std::vector<double> values(std::size_t{1} << n, 0.0);
  std::bernoulli_distribution zero(0.25);
  for (Subset s = 1; s < values.size(); ++s) {
    double base = 0.0;
    for (int e : Elements(s)) base = std::max(base, values[s & ~Singleton(e)]);
    values[s] = base + (zero(rng) ? 0.0 : Draw(rng, 0.0, 0.3, dyadic));
  }
  return std::make_shared<TableCost>(n, std::move(values));
}

enum class SubmodularKind { kAdditive, kBudgetAdditive, kCoverage, kConcave };

inline SetFunctionPtr RandomSubmodular(int n, Rng& rng, SubmodularKind kind) {
  switch (kind) {
    case SubmodularKind::kAdditive: {
      std::vector<double> w(n);
      for (double& x : w) x = Draw(rng, 0.0, 0.3);
      return std::make_shared<AdditiveCost>(std::move(w));
    }
    case SubmodularKind::kBudgetAdditive: {
      std::vector<double> w(n);
      for (double& x : w) x = Draw(rng, 0.0, 0.3);
      return std::make_shared<BudgetAdditiveCost>(std::move(w),
                                                  Draw(rng, 0.05, 0.6));
    }
    case SubmodularKind::kCoverage: {
      const int universe = 2 + static_cast<int>(rng() % 5);
      std::vector<double> weights(universe);
      for (double& x : weights) x = Draw(rng, 0.0, 0.2);
      std::vector<std::vector<int>> covers(n);
      for (auto& c : covers) {
        for (int u = 0; u < universe; ++u) {
          if (rng() % 2 == 0) c.push_back(u);
        }
      }
      return std::make_shared<WeightedCoverageCost>(std::move(weights),
                                                    std::move(covers));
    }
    case SubmodularKind::kConcave: {
      std::vector<double> inc(n);
      for (double& x : inc) x = Draw(rng, 0.0, 0.25);
      std::sort(inc.rbegin(), inc.rend());
      std::vector<double> table(n + 1, 0.0);
      for (int t = 1; t <= n; ++t) table[t] = table[t - 1] + inc[t - 1];
      return std::make_shared<ConcaveCardinalityCost>(std::move(table));
    }
  }
  return nullptr;
}

// Action 0 is "bot" with cost 0; the others have c < f most of the time.
inline std::vector<Action> RandomActions(int n, Rng& rng, bool dyadic = false) {
  std::vector<Action> actions;
  std::bernoulli_distribution zero_prob(0.5);
  actions.push_back({"bot", 0.0, zero_prob(rng) ? 0.0 : Draw(rng, 0.0, 0.3, dyadic)});
  for (int a = 1; a < n; ++a) {
    const double f = Draw(rng, 0.05, 1.0, dyadic);
    const double c = Draw(rng, 0.0, 0.8 * f, dyadic);
    actions.push_back({"a" + std::to_string(a), c, f});
  }
  return actions;
}

inline Instance RandomInstance(int n, Rng& rng, SetFunctionPtr cost,
                               bool dyadic = false) {
  return Instance(RandomActions(n, rng, dyadic), "bot", std::move(cost));
}

}  // namespace icx::testing

#endif  // ICX_TESTS_COMMON_GENERATORS_H_
