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

#include "liftcover/knapsack.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "liftcover/error.h"

namespace liftcover {
namespace {

void CheckItems(const KnapsackRow& row, std::span<const int> items) {
  std::vector<bool> seen(row.size(), false);
  for (int j : items) {
    if (j < 0 || j >= row.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "item index " + std::to_string(j) + " out of range [0, " +
                      std::to_string(row.size()) + ")");
    }
    if (seen[j]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "item " + std::to_string(j) + " listed twice");
    }
    seen[j] = true;
  }
}

}  // namespace

KnapsackRow::KnapsackRow(std::vector<int64_t> weights, int64_t capacity)
    : weights_(std::move(weights)), capacity_(capacity) {
  if (weights_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "knapsack row has no items");
  }
  if (capacity_ <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "capacity must be positive");
  }
  for (size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] <= 0 || weights_[j] > capacity_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weight of item " + std::to_string(j) + " is " +
                      std::to_string(weights_[j]) + ", must lie in [1, " +
                      std::to_string(capacity_) + "]");
    }
  }
}

int64_t KnapsackRow::WeightOf(std::span<const int> items) const {
  int64_t total = 0;
  for (int j : items) {
    if (j < 0 || j >= size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "item index " + std::to_string(j) + " out of range");
    }
    total += weights_[j];
  }
  return total;
}

bool IsMinimalCover(const KnapsackRow& row, std::span<const int> items) {
  CheckItems(row, items);
  if (items.empty()) return false;
  int64_t total = row.WeightOf(items);
  if (total <= row.capacity()) return false;
  // Removing the lightest item leaves the heaviest remainder.
  int64_t lightest = row.weight(items[0]);
  for (int j : items) lightest = std::min(lightest, row.weight(j));
  return total - lightest <= row.capacity();
}

CoverParams CoverParams::Create(const KnapsackRow& row,
                                std::span<const int> cover) {
  CheckItems(row, cover);
  int64_t total = cover.empty() ? 0 : row.WeightOf(cover);
  if (total <= row.capacity()) {
    throw Error(ErrorCode::kNotACover,
                "not a cover: total weight " + std::to_string(total) +
                    " does not exceed capacity " +
                    std::to_string(row.capacity()));
  }
  CoverParams p(row);
  p.sorted_items_.assign(cover.begin(), cover.end());
  std::sort(p.sorted_items_.begin(), p.sorted_items_.end(), [&](int i, int j) {
    if (row.weight(i) != row.weight(j)) return row.weight(i) > row.weight(j);
    return i < j;
  });
  const int t = static_cast<int>(p.sorted_items_.size());
  const int lightest = p.sorted_items_.back();
  if (total - row.weight(lightest) > row.capacity()) {
    throw Error(ErrorCode::kNotMinimal,
                "not minimal: the cover still overflows without item " +
                    std::to_string(lightest) + " (weight " +
                    std::to_string(total - row.weight(lightest)) + " > " +
                    std::to_string(row.capacity()) + ")");
  }
  p.cover_ = p.sorted_items_;
  std::sort(p.cover_.begin(), p.cover_.end());
  p.in_cover_.assign(row.size(), false);
  for (int j : p.cover_) p.in_cover_[j] = true;

  p.mu_.assign(t + 1, 0);
  for (int h = 1; h <= t; ++h) p.mu_[h] = p.mu_[h - 1] + p.a(h);
  p.lambda_ = p.mu_[t] - row.capacity();
  p.rho_.assign(t, 0);
  for (int h = 0; h < t; ++h) {
    p.rho_[h] = std::max<int64_t>(0, p.a(h + 1) - (p.a(1) - p.lambda_));
  }
  IntervalPartition& part = p.partition_;
  part.flat.reserve(t);
  for (int h = 0; h < t; ++h) {
    part.flat.push_back({p.mu_[h] - p.lambda_ + p.rho_[h], p.mu_[h + 1] - p.lambda_});
  }
  for (int h = 1; h < t; ++h) {
    part.sloped.push_back({p.mu_[h] - p.lambda_, p.mu_[h] - p.lambda_ + p.rho_[h]});
  }
  return p;
}

bool CoverParams::AdmitsAllSlopes() const {
  return mu_[1] - lambda_ >= rho1();
}

IntervalLocation IntervalPartition::Locate(const Rational& z) const {
  using Kind = IntervalLocation::Kind;
  if (z.Sign() <= 0) return {Kind::kZero, 0};
  for (size_t h = 0; h < flat.size(); ++h) {
    if (h >= 1 && sloped[h - 1].Contains(z)) {
      return {Kind::kSloped, static_cast<int>(h)};
    }
    if (flat[h].Contains(z)) return {Kind::kFlat, static_cast<int>(h)};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "point " + z.ToString() + " lies outside (0, b]");
}

int64_t LiftingFunction(const CoverParams& params, const Rational& z) {
  const int64_t b = params.row().capacity();
  if (z.Sign() < 0 || z > b) {
    throw Error(ErrorCode::kInvalidArgument,
                "lifting function argument " + z.ToString() +
                    " outside [0, " + std::to_string(b) + "]");
  }
  const int64_t lambda = params.lambda();
  int64_t h = 0;
  while (h + 1 < params.t() && z > params.mu(h + 1) - lambda) ++h;
  return h;
}

}  // namespace liftcover
