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

#include "liftcover/simplex.h"

#include <cmath>
#include <limits>
#include <string>

#include "liftcover/error.h"

namespace liftcover {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Compact tableau: x_B = beta - T x_N, one column per nonbasic variable.
// Variables 0..n-1 are structural, n..n+m-1 are the row slacks.
class Tableau {
 public:
  Tableau(const LpModel& model, const SimplexOptions& options)
      : model_(model),
        opt_(options),
        n_(model.num_vars()),
        m_(model.num_rows()),
        lo_(n_ + m_, 0.0),
        hi_(n_ + m_, kInf),
        cost_(n_ + m_, 0.0),
        status_(n_ + m_, VarStatus::kAtLower),
        val_(n_ + m_, 0.0) {
    for (int j = 0; j < n_; ++j) {
      lo_[j] = model.lo[j];
      hi_[j] = model.hi[j];
      cost_[j] = model.objective[j];
    }
    for (int i = 0; i < m_; ++i) status_[n_ + i] = VarStatus::kBasic;
  }

  void SetStatuses(const LpBasis& basis) {
    for (int j = 0; j < n_ && j < static_cast<int>(basis.structural.size());
         ++j) {
      status_[j] = basis.structural[j];
    }
    for (int i = 0; i < m_; ++i) {
      status_[n_ + i] = i < static_cast<int>(basis.slack.size())
                            ? basis.slack[i]
                            : VarStatus::kBasic;
    }
    // Keep the basis size at m: drop surplus basic structurals, fill with
    // slacks if there are too few.
    int basic = 0;
    for (VarStatus s : status_) basic += s == VarStatus::kBasic;
    for (int j = 0; j < n_ && basic > m_; ++j) {
      if (status_[j] == VarStatus::kBasic) {
        status_[j] = VarStatus::kAtLower;
        --basic;
      }
    }
    for (int i = 0; i < m_ && basic < m_; ++i) {
      if (status_[n_ + i] != VarStatus::kBasic) {
        status_[n_ + i] = VarStatus::kBasic;
        ++basic;
      }
    }
  }

  // Rebuilds the tableau for the current statuses from the model data.
  void Build() {
    t_.assign(static_cast<size_t>(m_) * n_, 0.0);
    beta_ = model_.rhs;
    basic_.resize(m_);
    nonbasic_.resize(n_);
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      for (int j = 0; j < n_; ++j) t_[Idx(i, j)] = model_.rows[i][j];
    }
    for (int j = 0; j < n_; ++j) nonbasic_[j] = j;
    for (int j = 0; j < n_; ++j) {
      if (status_[j] != VarStatus::kBasic) continue;
      const int c = ColumnOf(j);
      int best = -1;
      double best_abs = 1e-7;
      for (int r = 0; r < m_; ++r) {
        const int v = basic_[r];
        if (v < n_ || status_[v] == VarStatus::kBasic) continue;
        if (std::abs(t_[Idx(r, c)]) > best_abs) {
          best_abs = std::abs(t_[Idx(r, c)]);
          best = r;
        }
      }
      if (best < 0) {
        status_[j] = VarStatus::kAtLower;  // singular: keep the slack
        continue;
      }
      Pivot(best, c);
    }
    for (int r = 0; r < m_; ++r) status_[basic_[r]] = VarStatus::kBasic;
    for (int c = 0; c < n_; ++c) {
      const int v = nonbasic_[c];
      if (status_[v] == VarStatus::kBasic ||
          (status_[v] == VarStatus::kAtUpper && hi_[v] == kInf)) {
        status_[v] = VarStatus::kAtLower;
      }
      val_[v] = status_[v] == VarStatus::kAtUpper ? hi_[v] : lo_[v];
    }
    RecomputeBasics();
    pivots_since_build_ = 0;
  }

  LpSolution Solve() {
    LpSolution out;
    const int limit =
        opt_.iteration_limit > 0 ? opt_.iteration_limit : 50 * (m_ + n_) + 1000;
    int iterations = 0;
    int degenerate_run = 0;
    bool bland = false;
    std::vector<double> d(n_);
    while (true) {
      if (iterations >= limit) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex iteration limit reached (" +
                        std::to_string(limit) + ")");
      }
      if (pivots_since_build_ >= opt_.refactor_interval) Build();
      const bool phase1 = ComputeReducedCosts(d);
      int enter = -1;
      double best = 0;
      for (int c = 0; c < n_; ++c) {
        const int v = nonbasic_[c];
        if (lo_[v] == hi_[v]) continue;
        double score = 0;
        if (status_[v] == VarStatus::kAtLower && d[c] > opt_.optimality_tolerance) {
          score = d[c];
        } else if (status_[v] == VarStatus::kAtUpper &&
                   d[c] < -opt_.optimality_tolerance) {
          score = -d[c];
        } else {
          continue;
        }
        if (bland) {
          if (enter < 0 || v < nonbasic_[enter]) enter = c;
        } else if (score > best) {
          best = score;
          enter = c;
        }
      }
      if (enter < 0) {
        if (pivots_since_build_ > 0) {
          Build();  // confirm the verdict on fresh data
          if (ComputeReducedCosts(d) == phase1 && !HasCandidate(d)) {
            return Finish(phase1, iterations, d);
          }
          continue;
        }
        return Finish(phase1, iterations, d);
      }
      ++iterations;
      const double step = Step(enter, phase1, bland);
      if (step <= 1e-12) {
        if (++degenerate_run > 3 * (m_ + n_)) bland = true;
      } else {
        degenerate_run = 0;
      }
    }
  }

 private:
  size_t Idx(int r, int c) const { return static_cast<size_t>(r) * n_ + c; }

  int ColumnOf(int v) const {
    for (int c = 0; c < n_; ++c) {
      if (nonbasic_[c] == v) return c;
    }
    return -1;
  }

  void RecomputeBasics() {
    for (int r = 0; r < m_; ++r) {
      double x = beta_[r];
      for (int c = 0; c < n_; ++c) x -= t_[Idx(r, c)] * val_[nonbasic_[c]];
      val_[basic_[r]] = x;
    }
  }

  void Pivot(int r, int c) {
    const double p = t_[Idx(r, c)];
    double* prow = &t_[Idx(r, 0)];
    for (int j = 0; j < n_; ++j) prow[j] /= p;
    prow[c] = 1.0 / p;
    beta_[r] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[Idx(i, 0)];
      const double f = row[c];
      if (f == 0.0) continue;
      row[c] = 0.0;
      for (int j = 0; j < n_; ++j) row[j] -= f * prow[j];
      beta_[i] -= f * beta_[r];
    }
    std::swap(basic_[r], nonbasic_[c]);
    ++pivots_since_build_;
  }

  double Infeasibility(int v) const {
    if (val_[v] < lo_[v] - opt_.primal_tolerance) return lo_[v] - val_[v];
    if (val_[v] > hi_[v] + opt_.primal_tolerance) return val_[v] - hi_[v];
    return 0.0;
  }

  // Fills d with the reduced costs of the active phase; returns true in
  // phase 1 (some basic variable is out of bounds).
  bool ComputeReducedCosts(std::vector<double>& d) const {
    bool phase1 = false;
    std::vector<double> w(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const int v = basic_[r];
      if (val_[v] < lo_[v] - opt_.primal_tolerance) {
        w[r] = 1.0;
        phase1 = true;
      } else if (val_[v] > hi_[v] + opt_.primal_tolerance) {
        w[r] = -1.0;
        phase1 = true;
      }
    }
    if (!phase1) {
      for (int r = 0; r < m_; ++r) w[r] = -cost_[basic_[r]];
    }
    for (int c = 0; c < n_; ++c) d[c] = phase1 ? 0.0 : cost_[nonbasic_[c]];
    for (int r = 0; r < m_; ++r) {
      if (w[r] == 0.0) continue;
      const double* row = &t_[Idx(r, 0)];
      // Phase 1: d_c = -sum_r w_r T_rc; phase 2: c_c - sum_r c_Br T_rc.
      const double f = phase1 ? -w[r] : w[r];
      for (int c = 0; c < n_; ++c) d[c] += f * row[c];
    }
    return phase1;
  }

  bool HasCandidate(const std::vector<double>& d) const {
    for (int c = 0; c < n_; ++c) {
      const int v = nonbasic_[c];
      if (lo_[v] == hi_[v]) continue;
      if (status_[v] == VarStatus::kAtLower && d[c] > opt_.optimality_tolerance) {
        return true;
      }
      if (status_[v] == VarStatus::kAtUpper && d[c] < -opt_.optimality_tolerance) {
        return true;
      }
    }
    return false;
  }

  // Moves the entering variable in column c; returns the step length.
  double Step(int c, bool phase1, bool bland) {
    const int e = nonbasic_[c];
    const double sigma = status_[e] == VarStatus::kAtLower ? 1.0 : -1.0;
    double theta = hi_[e] - lo_[e];
    int leave = -1;
    bool leave_at_upper = false;
    double leave_pivot = 0;
    for (int r = 0; r < m_; ++r) {
      const double tc = t_[Idx(r, c)];
      if (std::abs(tc) < opt_.pivot_tolerance) continue;
      const double rate = -sigma * tc;
      const int v = basic_[r];
      const double x = val_[v];
      double limit = kInf;
      bool at_upper = false;
      const bool below = x < lo_[v] - opt_.primal_tolerance;
      const bool above = x > hi_[v] + opt_.primal_tolerance;
      if (phase1 && below) {
        if (rate > 0) limit = (lo_[v] - x) / rate;
      } else if (phase1 && above) {
        if (rate < 0) {
          limit = (x - hi_[v]) / -rate;
          at_upper = true;
        }
      } else if (rate < 0) {
        limit = std::max(0.0, x - lo_[v]) / -rate;
      } else if (hi_[v] < kInf) {
        limit = std::max(0.0, hi_[v] - x) / rate;
        at_upper = true;
      }
      if (limit == kInf) continue;
      bool take = false;
      if (leave < 0 && limit <= theta) {
        take = true;
      } else if (limit < theta - 1e-12) {
        take = true;
      } else if (leave >= 0 && limit <= theta + 1e-12) {
        take = bland ? v < basic_[leave] : std::abs(tc) > leave_pivot;
      }
      if (take) {
        theta = limit;
        leave = r;
        leave_at_upper = at_upper;
        leave_pivot = std::abs(tc);
      }
    }
    if (theta == kInf) {
      throw Error(ErrorCode::kNumericalFailure, "LP ray found in bounded model");
    }
    val_[e] += sigma * theta;
    for (int r = 0; r < m_; ++r) {
      const double tc = t_[Idx(r, c)];
      if (tc != 0.0) val_[basic_[r]] -= sigma * tc * theta;
    }
    if (leave < 0) {
      status_[e] = sigma > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
      val_[e] = sigma > 0 ? hi_[e] : lo_[e];
      return theta;
    }
    const int lv = basic_[leave];
    status_[lv] = leave_at_upper ? VarStatus::kAtUpper : VarStatus::kAtLower;
    val_[lv] = leave_at_upper ? hi_[lv] : lo_[lv];
    status_[e] = VarStatus::kBasic;
    Pivot(leave, c);
    return theta;
  }

  LpSolution Finish(bool phase1, int iterations, const std::vector<double>& d) {
    LpSolution out;
    out.iterations = iterations;
    out.basis.structural.assign(status_.begin(), status_.begin() + n_);
    out.basis.slack.assign(status_.begin() + n_, status_.end());
    if (phase1) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    out.status = LpStatus::kOptimal;
    out.x.assign(val_.begin(), val_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      out.x[j] = std::min(hi_[j], std::max(lo_[j], out.x[j]));
      out.objective += cost_[j] * out.x[j];
    }
    out.row_duals.assign(m_, 0.0);
    out.reduced_costs.assign(n_, 0.0);
    for (int c = 0; c < n_; ++c) {
      const int v = nonbasic_[c];
      if (v < n_) {
        out.reduced_costs[v] = d[c];
      } else {
        out.row_duals[v - n_] = -d[c];
      }
    }
    return out;
  }

  const LpModel& model_;
  SimplexOptions opt_;
  int n_, m_;
  std::vector<double> lo_, hi_, cost_;
  std::vector<VarStatus> status_;
  std::vector<double> val_;
  std::vector<double> t_;
  std::vector<double> beta_;
  std::vector<int> basic_, nonbasic_;
  int pivots_since_build_ = 0;
};

void Validate(const LpModel& model) {
  const int n = model.num_vars();
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "malformed LP: " + what);
  };
  if (static_cast<int>(model.lo.size()) != n ||
      static_cast<int>(model.hi.size()) != n) {
    fail("bound vectors must match the objective length");
  }
  if (model.rhs.size() != model.rows.size()) fail("one rhs per row required");
  for (const auto& row : model.rows) {
    if (static_cast<int>(row.size()) != n) fail("row length mismatch");
    for (double a : row) {
      if (!std::isfinite(a)) fail("non-finite coefficient");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(model.lo[j]) || !std::isfinite(model.hi[j]) ||
        !std::isfinite(model.objective[j])) {
      fail("bounds and objective must be finite");
    }
  }
  for (double b : model.rhs) {
    if (!std::isfinite(b)) fail("non-finite rhs");
  }
}

}  // namespace

void LpModel::AddRow(std::vector<double> coefficients, double b) {
  rows.push_back(std::move(coefficients));
  rhs.push_back(b);
}

LpSolution SolveLp(const LpModel& model, const LpBasis* warm_start,
                   const SimplexOptions& options) {
  Validate(model);
  for (int j = 0; j < model.num_vars(); ++j) {
    if (model.lo[j] > model.hi[j]) {
      LpSolution out;
      out.status = LpStatus::kInfeasible;
      return out;
    }
  }
  Tableau tableau(model, options);
  if (warm_start != nullptr) tableau.SetStatuses(*warm_start);
  tableau.Build();
  return tableau.Solve();
}

double DualObjective(const LpModel& model, const LpSolution& solution) {
  double value = 0;
  for (int i = 0; i < model.num_rows(); ++i) {
    value += model.rhs[i] * solution.row_duals[i];
  }
  for (int j = 0; j < model.num_vars(); ++j) {
    const double r = solution.reduced_costs[j];
    value += r > 0 ? model.hi[j] * r : model.lo[j] * r;
  }
  return value;
}

}  // namespace liftcover
