// Copyright 2026 The Liftcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIFTCOVER_SIMPLEX_H_
#define LIFTCOVER_SIMPLEX_H_

#include <cstdint>
#include <vector>

namespace liftcover {

// max c.x  s.t.  A x <= b,  lo <= x <= hi, with dense rows.
struct LpModel {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> lo;
  std::vector<double> hi;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  void AddRow(std::vector<double> coefficients, double b);
};

enum class VarStatus : int8_t { kBasic, kAtLower, kAtUpper };

// Statuses of the structural variables followed by the row slacks. A basis
// may cover fewer rows than the model it warm-starts; missing slacks are
// taken as basic.
struct LpBasis {
  std::vector<VarStatus> structural;
  std::vector<VarStatus> slack;
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0;
  // Non-negative multipliers of the rows and c - A^T y per variable.
  std::vector<double> row_duals;
  std::vector<double> reduced_costs;
  int iterations = 0;
  LpBasis basis;
};

struct SimplexOptions {
  double primal_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  // Rebuild the tableau from the model after this many pivots.
  int refactor_interval = 100;
  // 0 means 50 (m + n) + 1000.
  int iteration_limit = 0;
};

// Bounded-variable primal simplex. Dantzig pricing switches to Bland's rule
// after 3 (m + n) consecutive degenerate pivots. Throws kNumericalFailure
// when the iteration limit is reached or the model is malformed.
LpSolution SolveLp(const LpModel& model, const LpBasis* warm_start = nullptr,
                   const SimplexOptions& options = {});

// b.y + sum_j (hi_j max(r_j, 0) - lo_j max(-r_j, 0)) for a solution.
double DualObjective(const LpModel& model, const LpSolution& solution);

}  // namespace liftcover

#endif  // LIFTCOVER_SIMPLEX_H_
