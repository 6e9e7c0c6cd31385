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

#ifndef LIFTCOVER_INSTANCES_H_
#define LIFTCOVER_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftcover/knapsack.h"

namespace liftcover {

// A row sum_j coefficients[j] x_j <= rhs over the instance variables.
struct LinearRow {
  std::vector<int64_t> coefficients;
  int64_t rhs = 0;
  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

struct VariableFixing {
  int variable;
  int value;  // 0 or 1, in terms of the original variable
  friend bool operator==(const VariableFixing&, const VariableFixing&) = default;
};

// A row rewritten as a knapsack over y, where y_j = x_j or 1 - x_j.
struct NormalizedRow {
  // Absent when every variable was dropped or fixed.
  std::optional<KnapsackRow> row;
  // Knapsack item k refers to instance variable variables[k].
  std::vector<int> variables;
  // Per instance variable: true when y = 1 - x.
  std::vector<bool> complemented;
  // Variables whose weight exceeds the capacity and are therefore fixed.
  std::vector<VariableFixing> fixings;

  bool IsComplementedItem(int k) const { return complemented[variables[k]]; }
};

// Complements negative coefficients, drops zeros and fixes variables that
// cannot fit. Throws kInfeasibleRow when the adjusted rhs is negative.
NormalizedRow NormalizeRow(std::span<const int64_t> coefficients, int64_t rhs);

// Binary maximization program max c.x s.t. rows, x in {0,1}^n.
struct IpInstance {
  std::string name;
  std::vector<int64_t> objective;
  std::vector<LinearRow> rows;
  std::vector<NormalizedRow> normalized;  // one per row
  std::string kind;                       // generator family, if any
  std::optional<uint64_t> seed;

  int n() const { return static_cast<int>(objective.size()); }
  int m() const { return static_cast<int>(rows.size()); }

  // Bounds implied by the normalization fixings; lo > hi marks a conflict.
  std::vector<int> LowerBounds() const;
  std::vector<int> UpperBounds() const;

  // Objective and row values of a 0-1 point; feasibility is exact.
  int64_t Value(std::span<const int> x) const;
  bool IsFeasible(std::span<const int> x) const;
};

// Validates dimensions and normalizes every row.
IpInstance MakeInstance(std::string name, std::vector<int64_t> objective,
                        std::vector<LinearRow> rows);

enum class MkpKind { kUncorrelated, kWeaklyCorrelated };
const char* MkpKindName(MkpKind kind);
std::optional<MkpKind> ParseMkpKind(std::string_view name);

// Multi-row knapsack with weights uniform in [10, 1000] and capacities at
// half of each row's total weight.
IpInstance GenMkp(MkpKind kind, int n, int m, uint64_t seed);

// Single row with a_j uniform in [1, 10^4], c = a, b = floor(sum a / 2).
IpInstance GenChvatal(int n, uint64_t seed);

// Text format: "n m", the objective, then m lines "a_1 ... a_n b".
// '#' starts a comment; "# name:", "# kind:" and "# seed:" carry metadata.
IpInstance ParseInstance(std::string_view text);
std::string FormatInstance(const IpInstance& instance);
IpInstance ReadInstance(const std::string& path);
void WriteInstance(const IpInstance& instance, const std::string& path);

}  // namespace liftcover

#endif  // LIFTCOVER_INSTANCES_H_
