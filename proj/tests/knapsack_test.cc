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

#include <gtest/gtest.h>

#include <random>

#include "liftcover/error.h"
#include "liftcover/oracles.h"
#include "test_support.h"

namespace liftcover {
namespace {

using testing::Items;

KnapsackRow FacetRow() {
  return KnapsackRow({16, 14, 13, 9, 9, 10, 11, 23}, 44);
}

TEST(KnapsackRowTest, RejectsBadWeights) {
  EXPECT_THROW(KnapsackRow({3, 0}, 5), Error);
  EXPECT_THROW(KnapsackRow({3, 6}, 5), Error);
  EXPECT_THROW(KnapsackRow({3, -1}, 5), Error);
}

TEST(KnapsackRowTest, WeightOfChecksIndices) {
  KnapsackRow row = FacetRow();
  EXPECT_EQ(row.WeightOf(Items({1, 2, 3, 4})), 52);
  std::vector<int> bad = {8};
  EXPECT_THROW(row.WeightOf(bad), Error);
}

TEST(CoverParamsTest, WorkedExampleParameters) {
  CoverParams p = CoverParams::Create(FacetRow(), Items({1, 2, 3, 4}));
  EXPECT_EQ(p.mu(), (std::vector<int64_t>{0, 16, 30, 43, 52}));
  EXPECT_EQ(p.lambda(), 8);
  EXPECT_EQ(p.rho(), (std::vector<int64_t>{8, 6, 5, 1}));
  EXPECT_EQ(p.rho1(), 6);
  EXPECT_EQ(p.mu(4) - p.lambda(), p.row().capacity());
  EXPECT_TRUE(p.AdmitsAllSlopes());
}

TEST(CoverParamsTest, SortsByWeightThenIndex) {
  KnapsackRow row({5, 7, 5, 7}, 20);
  CoverParams p = CoverParams::Create(row, std::vector<int>{0, 1, 2, 3});
  EXPECT_EQ(p.sorted_items(), (std::vector<int>{1, 3, 0, 2}));
  EXPECT_EQ(p.cover(), (std::vector<int>{0, 1, 2, 3}));
}

TEST(CoverParamsTest, RejectsNonCovers) {
  KnapsackRow row = FacetRow();
  try {
    CoverParams::Create(row, Items({1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotACover);
  }
  try {
    CoverParams::Create(row, Items({1, 2, 3, 4, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMinimal);
  }
  std::vector<int> bad = {0, 9};
  EXPECT_THROW(CoverParams::Create(row, bad), Error);
}

TEST(CoverParamsTest, MinimalCoverPredicate) {
  KnapsackRow row = FacetRow();
  EXPECT_TRUE(IsMinimalCover(row, Items({1, 2, 3, 4})));
  EXPECT_FALSE(IsMinimalCover(row, Items({1, 2, 3, 4, 5})));
  EXPECT_FALSE(IsMinimalCover(row, Items({1, 2})));
}

TEST(IntervalPartitionTest, WorkedExample) {
  CoverParams p = CoverParams::Create(FacetRow(), Items({1, 2, 3, 4}));
  IntervalPartition part = p.Partition();
  ASSERT_EQ(part.flat.size(), 4u);
  EXPECT_EQ(part.flat[0], (Interval{0, 8}));
  EXPECT_EQ(part.flat[1], (Interval{14, 22}));
  EXPECT_EQ(part.flat[2], (Interval{27, 35}));
  EXPECT_EQ(part.flat[3], (Interval{36, 44}));
  ASSERT_EQ(part.sloped.size(), 3u);
  EXPECT_EQ(part.sloped[0], (Interval{8, 14}));
  EXPECT_EQ(part.sloped[1], (Interval{22, 27}));
  EXPECT_EQ(part.sloped[2], (Interval{35, 36}));

  using Kind = IntervalLocation::Kind;
  EXPECT_EQ(part.Locate(0), (IntervalLocation{Kind::kZero, 0}));
  EXPECT_EQ(part.Locate(8), (IntervalLocation{Kind::kFlat, 0}));
  EXPECT_EQ(part.Locate(9), (IntervalLocation{Kind::kSloped, 1}));
  EXPECT_EQ(part.Locate(14), (IntervalLocation{Kind::kSloped, 1}));
  EXPECT_EQ(part.Locate(Rational(29, 2)), (IntervalLocation{Kind::kFlat, 1}));
  EXPECT_EQ(part.Locate(44), (IntervalLocation{Kind::kFlat, 3}));
  EXPECT_THROW(part.Locate(45), Error);
}

TEST(IntervalPartitionTest, CoversZeroToCapacityWithoutGaps) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto rc = testing::MakeRandomCover(rng, 2 + trial % 6, 0, 40);
    CoverParams p = CoverParams::Create(rc.row, rc.cover);
    IntervalPartition part = p.Partition();
    int64_t at = 0;
    for (int h = 0; h < p.t(); ++h) {
      if (h >= 1) {
        EXPECT_EQ(part.sloped[h - 1].lo, at);
        at = part.sloped[h - 1].hi;
      }
      EXPECT_EQ(part.flat[h].lo, at);
      at = part.flat[h].hi;
    }
    EXPECT_EQ(at, rc.row.capacity());
  }
}

TEST(LiftingFunctionTest, WorkedExampleValues) {
  CoverParams p = CoverParams::Create(FacetRow(), Items({1, 2, 3, 4}));
  EXPECT_EQ(LiftingFunction(p, 0), 0);
  EXPECT_EQ(LiftingFunction(p, 8), 0);
  EXPECT_EQ(LiftingFunction(p, 9), 1);
  EXPECT_EQ(LiftingFunction(p, 22), 1);
  EXPECT_EQ(LiftingFunction(p, 23), 2);
  EXPECT_EQ(LiftingFunction(p, 44), 3);
  EXPECT_THROW(LiftingFunction(p, 45), Error);
  EXPECT_THROW(LiftingFunction(p, -1), Error);
}

TEST(LiftingFunctionTest, MatchesBruteForceOnRandomCovers) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto rc = testing::MakeRandomCover(rng, 2 + trial % 7, 0, 60);
    CoverParams p = CoverParams::Create(rc.row, rc.cover);
    for (int64_t z = 0; z <= rc.row.capacity(); ++z) {
      ASSERT_EQ(LiftingFunction(p, z),
                LiftingFunctionBruteForce(rc.row, rc.cover, z))
          << "z = " << z;
    }
  }
}

}  // namespace
}  // namespace liftcover
