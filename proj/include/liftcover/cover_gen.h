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

#ifndef LIFTCOVER_COVER_GEN_H_
#define LIFTCOVER_COVER_GEN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liftcover/knapsack.h"

namespace liftcover {

// Items with LP value above this are candidates for cover membership.
inline constexpr double kSupportTolerance = 1e-7;

// Fractional point x^LP in [0, 1]^n; values are clamped on construction.
class LpPoint {
 public:
  explicit LpPoint(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[j]; }
  const std::vector<double>& values() const { return values_; }

  // {j : x_j > kSupportTolerance} in ascending index order.
  std::vector<int> Support() const;

 private:
  std::vector<double> values_;
};

using Cover = std::vector<int>;  // ascending item indices

enum class CoverMethod { kContiguous, kSpread, kHeaviest, kDefault, kBangForBuck };

inline constexpr CoverMethod kAllCoverMethods[] = {
    CoverMethod::kContiguous, CoverMethod::kSpread, CoverMethod::kHeaviest,
    CoverMethod::kDefault, CoverMethod::kBangForBuck};

const char* CoverMethodName(CoverMethod method);
std::optional<CoverMethod> ParseCoverMethod(std::string_view name);

// For each support item i in descending-weight order, the shortest run
// i, i+1, ..., j of that order which overflows the knapsack.
std::vector<Cover> ContiguousCovers(const KnapsackRow& row, const LpPoint& x);

// For each head i, {i} plus the lightest possible run j..k of later items.
std::vector<Cover> SpreadCovers(const KnapsackRow& row, const LpPoint& x);

// The contiguous cover starting at the heaviest support item.
std::optional<Cover> HeaviestContiguousCover(const KnapsackRow& row,
                                             const LpPoint& x);

// Items by descending LP value until they overflow, then the lightest items
// are evicted while the rest still overflows.
std::optional<Cover> DefaultCover(const KnapsackRow& row, const LpPoint& x);

// As DefaultCover, ordered by descending c_j / a_j.
std::optional<Cover> BangForBuckCover(const KnapsackRow& row, const LpPoint& x,
                                      std::span<const int64_t> objective);

// Dispatches on the method; the objective is only read by kBangForBuck.
std::vector<Cover> GenerateCovers(CoverMethod method, const KnapsackRow& row,
                                  const LpPoint& x,
                                  std::span<const int64_t> objective);

}  // namespace liftcover

#endif  // LIFTCOVER_COVER_GEN_H_
