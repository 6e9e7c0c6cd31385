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

#include "liftcover/piecewise.h"

#include <gtest/gtest.h>

#include <random>

#include "liftcover/error.h"
#include "test_support.h"

namespace liftcover {
namespace {

using testing::Items;
using R = Rational;
using PL = PiecewiseLinear<Rational>;

CoverParams WorkedParams(std::vector<int64_t> extras = {}) {
  std::vector<int64_t> w = {16, 14, 13, 9};
  w.insert(w.end(), extras.begin(), extras.end());
  return CoverParams::Create(KnapsackRow(w, 44), Items({1, 2, 3, 4}));
}

// Brute-force violation over a rational grid.
Rational GridViolation(const PL& g, int64_t steps_per_unit) {
  Rational worst = 0;
  const int64_t n = (g.end() * Rational(steps_per_unit)).Floor();
  for (int64_t i = 0; i <= n; ++i) {
    for (int64_t j = i; i + j <= n; ++j) {
      R z1(i, steps_per_unit), z2(j, steps_per_unit);
      worst = std::max(worst, g(z1) + g(z2) - g(z1 + z2));
    }
  }
  return worst;
}

TEST(PiecewiseLinearTest, RejectsMalformedPieces) {
  EXPECT_THROW(PL(R(0), {}), Error);
  EXPECT_THROW(PL(R(0), {{R(1), R(2), R(0), R(0)}}), Error);
  EXPECT_THROW(PL(R(0), {{R(0), R(1), R(0), R(0)}, {R(2), R(3), R(0), R(0)}}),
               Error);
}

TEST(PiecewiseLinearTest, EvaluatesAndTracksJumps) {
  // 0 on (0, 1], jump to 1 then slope 1 on (1, 2].
  PL g(R(0), {{R(0), R(1), R(0), R(0)}, {R(1), R(2), R(2), R(1)}});
  EXPECT_EQ(g(R(0)), R(0));
  EXPECT_EQ(g(R(1)), R(0));
  EXPECT_EQ(g(R(3, 2)), R(3, 2));
  EXPECT_TRUE(g.jumps_at_break(1));
  EXPECT_FALSE(g.jumps_at_break(0));
  EXPECT_EQ(g.right_limit_at_break(1), R(1));
  EXPECT_THROW(g(R(3)), Error);
  PL::Cursor cursor(g);
  EXPECT_EQ(cursor.At(R(1, 2)).value, R(0));
  auto s = cursor.At(R(1));
  EXPECT_EQ(s.value, R(0));
  EXPECT_EQ(s.right_limit, R(1));
  EXPECT_EQ(cursor.At(R(2)).value, R(2));
}

TEST(SuperadditivityTest, LinearAndConcaveCases) {
  PL linear(R(0), {{R(0), R(4), R(4), R(1)}});
  EXPECT_FALSE(FindSuperadditivityViolation(linear).has_value());
  // Concave: slope 1 then 0. g(1) + g(1) - g(2) = 1.
  PL concave(R(0), {{R(0), R(1), R(1), R(1)}, {R(1), R(2), R(1), R(0)}});
  auto v = FindSuperadditivityViolation(concave);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->violation, R(1));
}

TEST(SuperadditivityTest, DetectsSupremumAtAnOpenVertex) {
  // g = 0 on [0, 1] and 1 on (1, 3]: violation 1 whenever z1, z2 > 1.
  PL step(R(0), {{R(0), R(1), R(0), R(0)}, {R(1), R(3), R(1), R(0)}});
  auto v = FindSuperadditivityViolation(step);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->limit_violation, R(1));
  EXPECT_EQ(v->violation, R(1));
  EXPECT_EQ(step(v->z1) + step(v->z2) - step(v->z1 + v->z2), v->violation);
}

TEST(SuperadditivityTest, ToleranceAndWindow) {
  PL concave(R(0), {{R(0), R(1), R(1), R(1)}, {R(1), R(4), R(1), R(0)}});
  SuperadditivityOptions<Rational> opt;
  opt.tolerance = R(2);
  EXPECT_FALSE(FindSuperadditivityViolation(concave, opt).has_value());
  SuperadditivityOptions<Rational> window;
  window.window = std::make_pair(R(2), R(3));
  // Inside the window only z1 = z2 = 2 keeps z1 + z2 within the domain.
  auto v = FindSuperadditivityViolation(concave, window);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->violation, R(1));
  EXPECT_EQ(v->z1, R(2));
  EXPECT_EQ(v->z2, R(2));
}

TEST(SuperadditivityTest, AgreesWithGridSearchOnRandomStepFunctions) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> value(-2, 3);
  std::uniform_int_distribution<int> slope(-1, 1);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<PL::Piece> pieces;
    for (int i = 0; i < 4; ++i) {
      pieces.push_back({R(i), R(i + 1), R(value(rng)), R(slope(rng))});
    }
    PL g(R(0), pieces);
    auto v = FindSuperadditivityViolation(g);
    const Rational grid = GridViolation(g, 4);
    if (!v) {
      EXPECT_EQ(grid, R(0));
      continue;
    }
    // The grid includes the breakpoints, so it can only under-estimate.
    EXPECT_LE(grid, v->limit_violation);
    EXPECT_GT(v->violation, R(0));
    EXPECT_EQ(g(v->z1) + g(v->z2) - g(v->z1 + v->z2), v->violation);
  }
}

TEST(GkPiecewiseTest, MatchesPointwiseEvaluation) {
  CoverParams p = WorkedParams();
  for (const LiftParam& param :
       {LiftParam::Pc(), LiftParam::Gns(), LiftParam::Slope(R(1, 12))}) {
    PL g = GkPiecewise(p, param);
    EXPECT_EQ(g.end(), R(44));
    for (int64_t twice = 0; twice <= 88; ++twice) {
      EXPECT_EQ(g(R(twice, 2)), EvalGk(p, param, R(twice, 2)));
    }
  }
}

TEST(GkPiecewiseTest, SuperadditiveOnWorkedCover) {
  CoverParams p = WorkedParams();
  for (const LiftParam& param :
       {LiftParam::Pc(), LiftParam::Gns(), LiftParam::Slope(R(1, 12))}) {
    EXPECT_FALSE(FindSuperadditivityViolation(GkPiecewise(p, param)).has_value())
        << param.ToString();
  }
}

TEST(GkPiecewiseTest, SuperadditiveOnRandomAdmissibleCovers) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    auto rc = testing::MakeAdmissibleCover(rng, 2 + trial % 6, 0, 60);
    CoverParams p = CoverParams::Create(rc.row, rc.cover);
    LiftParam param = LiftParam::Slope(testing::RandomSlope(rng, p));
    auto v = FindSuperadditivityViolation(GkPiecewise(p, param));
    ASSERT_FALSE(v.has_value()) << "violation " << v->violation;
  }
}

TEST(GkPiecewiseTest, PcFailsWhenSlopeConditionFails) {
  // mu_1 - lambda = 2 < rho_1 = 7; only the GNS function is superadditive.
  KnapsackRow row({10, 9, 9}, 20);
  CoverParams p = CoverParams::Create(row, std::vector<int>{0, 1, 2});
  EXPECT_FALSE(
      FindSuperadditivityViolation(GkPiecewise(p, LiftParam::Gns())).has_value());
}

TEST(GwPiecewiseTest, LogisticViolationNearEightyTwo) {
  KnapsackRow row({112, 108, 107, 106, 102, 84, 82}, 268);
  CoverParams p = CoverParams::Create(row, std::vector<int>{1, 2, 3});
  TabulatedFunction w = LogisticW(0.9, static_cast<double>(p.rho1()));
  PiecewiseLinear<double> g = GwPiecewise(p, w);
  SuperadditivityOptions<double> opt;
  opt.tolerance = 1e-9;
  opt.window = std::make_pair(80.0, 86.0);
  auto v = FindSuperadditivityViolation(g, opt);
  ASSERT_TRUE(v.has_value());
  EXPECT_GE(v->violation, 0.4);
  for (int j = 0; j < row.size(); ++j) {
    if (p.InCover(j)) continue;
    EXPECT_NEAR(g(static_cast<double>(row.weight(j))),
                EvalGw(p, w, row.weight(j)), 1e-9);
  }
}

}  // namespace
}  // namespace liftcover
