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

#include "liftcover/cover_gen.h"

#include <algorithm>
#include <set>
#include <string>

#include "liftcover/error.h"

namespace liftcover {
namespace {

void CheckDimensions(const KnapsackRow& row, const LpPoint& x) {
  if (row.size() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row has " + std::to_string(row.size()) +
                    " items but the LP point has " + std::to_string(x.size()));
  }
}

// Support sorted by descending weight, ties by ascending index.
std::vector<int> ByWeight(const KnapsackRow& row, const LpPoint& x) {
  std::vector<int> items = x.Support();
  std::stable_sort(items.begin(), items.end(), [&](int i, int j) {
    return row.weight(i) > row.weight(j);
  });
  return items;
}

Cover Sorted(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  return items;
}

void AppendUnique(std::vector<Cover>& out, std::set<Cover>& seen, Cover c) {
  if (seen.insert(c).second) out.push_back(std::move(c));
}

// Takes the shortest overflowing prefix of order, then repeatedly drops the
// lightest item (lowest index among equals) whose removal keeps it a cover.
std::optional<Cover> PrefixThenEvict(const KnapsackRow& row,
                                     const std::vector<int>& order) {
  std::vector<int> chosen;
  int64_t total = 0;
  for (int j : order) {
    chosen.push_back(j);
    total += row.weight(j);
    if (total > row.capacity()) break;
  }
  if (total <= row.capacity()) return std::nullopt;
  std::stable_sort(chosen.begin(), chosen.end(), [&](int i, int j) {
    if (row.weight(i) != row.weight(j)) return row.weight(i) < row.weight(j);
    return i < j;
  });
  bool evicted = true;
  while (evicted) {
    evicted = false;
    for (size_t p = 0; p < chosen.size(); ++p) {
      if (total - row.weight(chosen[p]) > row.capacity()) {
        total -= row.weight(chosen[p]);
        chosen.erase(chosen.begin() + p);
        evicted = true;
        break;
      }
    }
  }
  return Sorted(std::move(chosen));
}

}  // namespace

LpPoint::LpPoint(std::vector<double> values) : values_(std::move(values)) {
  for (double& v : values_) v = std::clamp(v, 0.0, 1.0);
}

std::vector<int> LpPoint::Support() const {
  std::vector<int> items;
  for (int j = 0; j < size(); ++j) {
    if (values_[j] > kSupportTolerance) items.push_back(j);
  }
  return items;
}

const char* CoverMethodName(CoverMethod method) {
  switch (method) {
    case CoverMethod::kContiguous: return "contiguous";
    case CoverMethod::kSpread: return "spread";
    case CoverMethod::kHeaviest: return "heaviest";
    case CoverMethod::kDefault: return "default";
    case CoverMethod::kBangForBuck: return "bang-for-buck";
  }
  return "?";
}

std::optional<CoverMethod> ParseCoverMethod(std::string_view name) {
  for (CoverMethod m : kAllCoverMethods) {
    if (name == CoverMethodName(m)) return m;
  }
  return std::nullopt;
}

std::vector<Cover> ContiguousCovers(const KnapsackRow& row, const LpPoint& x) {
  CheckDimensions(row, x);
  const std::vector<int> order = ByWeight(row, x);
  std::vector<Cover> out;
  std::set<Cover> seen;
  for (size_t i = 0; i < order.size(); ++i) {
    int64_t total = 0;
    for (size_t j = i; j < order.size(); ++j) {
      total += row.weight(order[j]);
      if (total > row.capacity()) {
        Cover c = Sorted({order.begin() + i, order.begin() + j + 1});
        if (!IsMinimalCover(row, c)) {
          throw Error(ErrorCode::kNumericalFailure,
                      "contiguous cover is not minimal");
        }
        AppendUnique(out, seen, std::move(c));
        break;
      }
    }
  }
  return out;
}

std::vector<Cover> SpreadCovers(const KnapsackRow& row, const LpPoint& x) {
  CheckDimensions(row, x);
  const std::vector<int> order = ByWeight(row, x);
  const int s = static_cast<int>(order.size());
  std::vector<Cover> out;
  std::set<Cover> seen;
  for (int i = 0; i < s; ++i) {
    const int64_t head = row.weight(order[i]);
    // Tail start j from the lightest position upwards; the first j that
    // admits an overflowing run j..k wins.
    for (int j = s - 1; j > i; --j) {
      int64_t total = head;
      int k = j;
      for (; k < s; ++k) {
        total += row.weight(order[k]);
        if (total > row.capacity()) break;
      }
      if (k == s) continue;
      std::vector<int> items{order[i]};
      items.insert(items.end(), order.begin() + j, order.begin() + k + 1);
      Cover c = Sorted(std::move(items));
      if (!IsMinimalCover(row, c)) {
        throw Error(ErrorCode::kNumericalFailure, "spread cover is not minimal");
      }
      AppendUnique(out, seen, std::move(c));
      break;
    }
  }
  return out;
}

std::optional<Cover> HeaviestContiguousCover(const KnapsackRow& row,
                                             const LpPoint& x) {
  CheckDimensions(row, x);
  const std::vector<int> order = ByWeight(row, x);
  int64_t total = 0;
  for (size_t j = 0; j < order.size(); ++j) {
    total += row.weight(order[j]);
    if (total > row.capacity()) {
      return Sorted({order.begin(), order.begin() + j + 1});
    }
  }
  return std::nullopt;
}

std::optional<Cover> DefaultCover(const KnapsackRow& row, const LpPoint& x) {
  CheckDimensions(row, x);
  std::vector<int> order = x.Support();
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return x[i] > x[j]; });
  return PrefixThenEvict(row, order);
}

std::optional<Cover> BangForBuckCover(const KnapsackRow& row, const LpPoint& x,
                                      std::span<const int64_t> objective) {
  CheckDimensions(row, x);
  if (static_cast<int>(objective.size()) != row.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "objective length does not match the row");
  }
  std::vector<int> order = x.Support();
  // c_i / a_i > c_j / a_j  <=>  c_i a_j > c_j a_i  (weights are positive).
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return static_cast<__int128>(objective[i]) * row.weight(j) >
           static_cast<__int128>(objective[j]) * row.weight(i);
  });
  return PrefixThenEvict(row, order);
}

std::vector<Cover> GenerateCovers(CoverMethod method, const KnapsackRow& row,
                                  const LpPoint& x,
                                  std::span<const int64_t> objective) {
  auto wrap = [](std::optional<Cover> c) {
    return c ? std::vector<Cover>{std::move(*c)} : std::vector<Cover>{};
  };
  switch (method) {
    case CoverMethod::kContiguous: return ContiguousCovers(row, x);
    case CoverMethod::kSpread: return SpreadCovers(row, x);
    case CoverMethod::kHeaviest: return wrap(HeaviestContiguousCover(row, x));
    case CoverMethod::kDefault: return wrap(DefaultCover(row, x));
    case CoverMethod::kBangForBuck:
      return wrap(BangForBuckCover(row, x, objective));
  }
  return {};
}

}  // namespace liftcover
