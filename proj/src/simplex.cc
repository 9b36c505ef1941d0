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

#include <cmath>
#include <stdexcept>

#include "icx/errors.h"

namespace icx {
namespace {

constexpr int kMaxIterations = 200000;

class Tableau {
 public:
  Tableau(int rows, int cols)
      : a_(rows, std::vector<double>(cols + 1, 0.0)),
        objective_(cols + 1, 0.0),
        basis_(rows, -1),
        cols_(cols) {}

  double& at(int r, int c) { return a_[r][c]; }
  double& rhs(int r) { return a_[r][cols_]; }
  int& basis(int r) { return basis_[r]; }
  int rows() const { return static_cast<int>(a_.size()); }

  // Sets reduced costs for the given cost vector and current basis.
  void Price(const std::vector<double>& cost) {
    for (int c = 0; c <= cols_; ++c) {
      objective_[c] = c < cols_ ? cost[c] : 0.0;
    }
    for (int r = 0; r < rows(); ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) objective_[c] -= cb * a_[r][c];
    }
  }

  double value() const { return -objective_[cols_]; }

  void Pivot(int row, int col) {
    std::vector<double>& pr = a_[row];
    const double inv = 1.0 / pr[col];
    for (double& x : pr) x *= inv;
    pr[col] = 1.0;
    for (int r = 0; r < rows(); ++r) {
      if (r == row) continue;
      const double factor = a_[r][col];
      if (factor == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) a_[r][c] -= factor * pr[c];
      a_[r][col] = 0.0;
    }
    const double factor = objective_[col];
    if (factor != 0.0) {
      for (int c = 0; c <= cols_; ++c) objective_[c] -= factor * pr[c];
      objective_[col] = 0.0;
    }
    basis_[row] = col;
  }

  // Bland's rule iterations over columns with allowed[c]. Returns false if
  // unbounded.
  bool Optimize(const std::vector<char>& allowed, double eps) {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (allowed[c] && objective_[c] < -eps) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < rows(); ++r) {
        const double coef = a_[r][enter];
        if (coef <= eps) continue;
        const double ratio = a_[r][cols_] / coef;
        if (leave < 0 || ratio < best_ratio - eps ||
            (ratio <= best_ratio + eps && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
    throw std::logic_error("simplex iteration limit reached");
  }

  void RemoveRow(int row) {
    a_.erase(a_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

 private:
  std::vector<std::vector<double>> a_;
  std::vector<double> objective_;
  std::vector<int> basis_;
  int cols_;
};

void Validate(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const int m = lp.num_constraints();
  if (n > kMaxLpVariables || m > kMaxLpConstraints) {
    throw SizeLimitError("linear program exceeds desk-scale limits");
  }
  if (static_cast<int>(lp.senses.size()) != m ||
      static_cast<int>(lp.rhs.size()) != m) {
    throw InputError("linear program has inconsistent row data");
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw InputError("non-finite objective entry");
  }
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(lp.rows[r].size()) != n) {
      throw InputError("constraint row has wrong length");
    }
    for (double x : lp.rows[r]) {
      if (!std::isfinite(x)) throw InputError("non-finite constraint entry");
    }
    if (!std::isfinite(lp.rhs[r])) throw InputError("non-finite rhs");
  }
}

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp, double eps) {
  Validate(lp);
  const int n = lp.num_variables();
  const int m = lp.num_constraints();

  // Column layout: originals, one slack/surplus per inequality, then one
  // artificial per row lacking a slack basis.
  int num_slack = 0;
  int num_artificial = 0;
  std::vector<RowSense> senses = lp.senses;
  std::vector<double> sign(m, 1.0);
  for (int r = 0; r < m; ++r) {
    if (lp.rhs[r] < 0.0) {
      sign[r] = -1.0;
      if (senses[r] == RowSense::kLessEqual) {
        senses[r] = RowSense::kGreaterEqual;
      } else if (senses[r] == RowSense::kGreaterEqual) {
        senses[r] = RowSense::kLessEqual;
      }
    }
    if (senses[r] != RowSense::kEqual) ++num_slack;
    if (senses[r] != RowSense::kLessEqual) ++num_artificial;
  }
  const int cols = n + num_slack + num_artificial;
  const int first_artificial = n + num_slack;
  Tableau t(m, cols);
  int next_slack = n;
  int next_artificial = first_artificial;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) t.at(r, c) = sign[r] * lp.rows[r][c];
    t.rhs(r) = sign[r] * lp.rhs[r];
    switch (senses[r]) {
      case RowSense::kLessEqual:
        t.at(r, next_slack) = 1.0;
        t.basis(r) = next_slack++;
        break;
      case RowSense::kGreaterEqual:
        t.at(r, next_slack++) = -1.0;
        t.at(r, next_artificial) = 1.0;
        t.basis(r) = next_artificial++;
        break;
      case RowSense::kEqual:
        t.at(r, next_artificial) = 1.0;
        t.basis(r) = next_artificial++;
        break;
    }
  }

  LpSolution out;
  std::vector<char> allowed(cols, 1);
  if (num_artificial > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int c = first_artificial; c < cols; ++c) phase1[c] = 1.0;
    t.Price(phase1);
    t.Optimize(allowed, eps);
    double scale = 1.0;
    for (int r = 0; r < m; ++r) scale += std::abs(lp.rhs[r]);
    if (t.value() > 1e-9 * scale) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (t.basis(r) < first_artificial) continue;
      int col = -1;
      for (int c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > 1e-9) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        t.Pivot(r, col);
      } else {
        t.RemoveRow(r);  // redundant constraint
      }
    }
    for (int c = first_artificial; c < cols; ++c) allowed[c] = 0;
  }

  std::vector<double> phase2(cols, 0.0);
  for (int c = 0; c < n; ++c) phase2[c] = lp.objective[c];
  t.Price(phase2);
  if (!t.Optimize(allowed, eps)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.x.assign(n, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    if (t.basis(r) < n) out.x[t.basis(r)] = std::max(0.0, t.rhs(r));
  }
  out.value = 0.0;
  for (int c = 0; c < n; ++c) out.value += lp.objective[c] * out.x[c];
  return out;
}

}  // namespace icx
