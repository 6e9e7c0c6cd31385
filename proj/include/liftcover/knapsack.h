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

#ifndef LIFTCOVER_KNAPSACK_H_
#define LIFTCOVER_KNAPSACK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "liftcover/rational.h"

namespace liftcover {

// A single 0-1 knapsack constraint  sum_j a_j x_j <= b  with 0 < a_j <= b.
class KnapsackRow {
 public:
  KnapsackRow(std::vector<int64_t> weights, int64_t capacity);

  int size() const { return static_cast<int>(weights_.size()); }
  int64_t weight(int j) const { return weights_[j]; }
  const std::vector<int64_t>& weights() const { return weights_; }
  int64_t capacity() const { return capacity_; }

  // Total weight of the given items; indices are checked.
  int64_t WeightOf(std::span<const int> items) const;

  friend bool operator==(const KnapsackRow&, const KnapsackRow&) = default;

 private:
  std::vector<int64_t> weights_;
  int64_t capacity_;
};

// True iff the items overflow the knapsack and dropping any single one of
// them makes the rest fit. Throws kIndexOutOfRange on a bad index.
bool IsMinimalCover(const KnapsackRow& row, std::span<const int> items);

// Half-open-left integer interval (lo, hi]. Empty when lo >= hi.
struct Interval {
  int64_t lo = 0;
  int64_t hi = 0;

  bool empty() const { return lo >= hi; }
  bool Contains(const Rational& z) const { return z > lo && z <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Where a point of (0, b] falls relative to the flat intervals F_h and the
// sloped intervals S_h of a cover.
struct IntervalLocation {
  enum class Kind { kZero, kFlat, kSloped };
  Kind kind = Kind::kZero;
  int h = 0;
  friend bool operator==(const IntervalLocation&,
                         const IntervalLocation&) = default;
};

class CoverParams;

struct IntervalPartition {
  // flat[h] = F_h = (mu_h - lambda + rho_h, mu_{h+1} - lambda], h = 0..t-1.
  std::vector<Interval> flat;
  // sloped[h - 1] = S_h = (mu_h - lambda, mu_h - lambda + rho_h], h = 1..t-1.
  // Entries with rho_h = 0 are present but empty.
  std::vector<Interval> sloped;

  IntervalLocation Locate(const Rational& z) const;
};

// A validated minimal cover with the quantities used by every lifting rule.
// Internally the cover is relabelled so that a_1 >= ... >= a_t (ties broken
// by ascending original index); accessors that return item indices always
// use the original numbering.
class CoverParams {
 public:
  // Throws kNotACover or kNotMinimal (naming the offending item) when the
  // set is not a minimal cover of the row.
  static CoverParams Create(const KnapsackRow& row, std::span<const int> cover);

  const KnapsackRow& row() const { return row_; }
  int t() const { return static_cast<int>(sorted_items_.size()); }

  // Cover items in ascending original index.
  const std::vector<int>& cover() const { return cover_; }
  // Cover items from heaviest to lightest.
  const std::vector<int>& sorted_items() const { return sorted_items_; }
  bool InCover(int j) const { return in_cover_[j]; }

  // a_h for h = 1..t in the sorted order.
  int64_t a(int h) const { return row_.weight(sorted_items_[h - 1]); }
  int64_t mu(int h) const { return mu_[h]; }
  int64_t lambda() const { return lambda_; }
  int64_t rho(int h) const { return rho_[h]; }
  const std::vector<int64_t>& mu() const { return mu_; }
  const std::vector<int64_t>& rho() const { return rho_; }

  // mu_1 - lambda >= rho_1: the family g_k is superadditive for every k.
  bool AdmitsAllSlopes() const;

  // Rho_1 when t >= 2, else 0.
  int64_t rho1() const { return t() >= 2 ? rho_[1] : 0; }

  const IntervalPartition& Partition() const { return partition_; }

 private:
  CoverParams(KnapsackRow row) : row_(std::move(row)) {}

  KnapsackRow row_;
  std::vector<int> cover_;
  std::vector<int> sorted_items_;
  std::vector<bool> in_cover_;
  std::vector<int64_t> mu_;
  int64_t lambda_ = 0;
  std::vector<int64_t> rho_;
  IntervalPartition partition_;
};

// Closed form of the maximal single-variable lifting coefficient:
// 0 on [0, mu_1 - lambda], h on (mu_h - lambda, mu_{h+1} - lambda].
// Requires 0 <= z <= b.
int64_t LiftingFunction(const CoverParams& params, const Rational& z);

}  // namespace liftcover

#endif  // LIFTCOVER_KNAPSACK_H_
