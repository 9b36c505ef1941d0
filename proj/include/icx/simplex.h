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

#ifndef ICX_SIMPLEX_H_
#define ICX_SIMPLEX_H_

#include <vector>

namespace icx {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

// minimize c'x  s.t.  rows[r] . x (sense) rhs[r],  x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(rows.size()); }

  void AddRow(std::vector<double> row, RowSense sense, double b) {
    rows.push_back(std::move(row));
    senses.push_back(sense);
    rhs.push_back(b);
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double value = 0.0;
};

inline constexpr int kMaxLpVariables = 1 << 12;
inline constexpr int kMaxLpConstraints = 128;

// Dense two-phase primal simplex with Bland's rule. Throws SizeLimitError
// beyond kMaxLpVariables / kMaxLpConstraints and InputError on inconsistent
// dimensions or non-finite entries.
LpSolution SolveLinearProgram(const LinearProgram& lp, double eps = 1e-11);

}  // namespace icx

#endif  // ICX_SIMPLEX_H_
