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

#include "liftcover/lifting.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "liftcover/error.h"
#include "liftcover/oracles.h"
#include "test_support.h"

namespace liftcover {
namespace {

using testing::Items;
using R = Rational;

KnapsackRow WithExtras(std::vector<int64_t> extras) {
  std::vector<int64_t> w = {16, 14, 13, 9};
  w.insert(w.end(), extras.begin(), extras.end());
  return KnapsackRow(w, 44);
}

std::vector<Rational> Tail(const LiftedCut& cut, int from) {
  return std::vector<Rational>(cut.coefficients.begin() + from,
                               cut.coefficients.end());
}

// Independent evaluation of g_k straight from the interval definitions.
Rational ReferenceGk(const CoverParams& p, const Rational& k,
                     const Rational& z) {
  if (z.IsZero()) return 0;
  const Rational half_gap = (Rational(1) - k * Rational(p.rho1())) / 2;
  for (int h = 0; h < p.t(); ++h) {
    const int64_t flat_lo = p.mu(h) - p.lambda() + p.rho(h);
    const int64_t flat_hi = p.mu(h + 1) - p.lambda();
    if (h >= 1 && z > p.mu(h) - p.lambda() && z <= flat_lo) {
      const Rational x = Rational(flat_lo) - z;
      return Rational(h) - (k * x + half_gap);
    }
    if (z > flat_lo && z <= flat_hi) return h;
  }
  ADD_FAILURE() << "z outside the domain: " << z;
  return 0;
}

TEST(LiftParamTest, SlopeRange) {
  CoverParams p = CoverParams::Create(WithExtras({}), Items({1, 2, 3, 4}));
  EXPECT_EQ(LiftParam::Pc().SlopeFor(p), R(0));
  EXPECT_EQ(LiftParam::Gns().SlopeFor(p), R(1, 6));
  EXPECT_EQ(LiftParam::Slope(R(1, 12)).SlopeFor(p), R(1, 12));
  EXPECT_THROW(LiftParam::Slope(R(1, 5)).SlopeFor(p), Error);
  EXPECT_THROW(LiftParam::Slope(R(-1, 5)).SlopeFor(p), Error);
  EXPECT_EQ(LiftParam::Pc().ToString(), "pc");
  EXPECT_EQ(LiftParam::Gns().ToString(), "gns");
  EXPECT_EQ(LiftParam::Slope(R(1, 12)).ToString(), "k=1/12");
}

TEST(LiftTest, PcOnFacetExample) {
  CoverParams p =
      CoverParams::Create(WithExtras({9, 10, 11, 23}), Items({1, 2, 3, 4}));
  LiftedCut cut = LiftPc(p);
  EXPECT_EQ(cut.coefficients,
            testing::Rationals({1, 1, 1, 1, R(1, 2), R(1, 2), R(1, 2),
                                R(3, 2)}));
  EXPECT_EQ(cut.rhs, R(3));
  EXPECT_EQ(cut.method, LiftMethod::kPc);
  EXPECT_EQ(cut.cover, Items({1, 2, 3, 4}));
}

struct DominationCase {
  std::vector<int64_t> extras;
  std::vector<Rational> gns;
  std::vector<Rational> pc;
  DominationVerdict verdict;
  size_t smart_count;
};

class DominationCaseTest : public ::testing::TestWithParam<DominationCase> {};

TEST_P(DominationCaseTest, CoefficientsAndVerdict) {
  const DominationCase& c = GetParam();
  CoverParams p = CoverParams::Create(WithExtras(c.extras), Items({1, 2, 3, 4}));
  EXPECT_EQ(Tail(LiftGns(p), 4), c.gns);
  EXPECT_EQ(Tail(LiftPc(p), 4), c.pc);
  EXPECT_EQ(ClassifyDomination(p), c.verdict);
  EXPECT_EQ(LiftSmart(p).size(), c.smart_count);
}

INSTANTIATE_TEST_SUITE_P(
    WorkedCases, DominationCaseTest,
    ::testing::Values(
        DominationCase{{9, 10, 23},
                       {R(1, 6), R(1, 3), R(4, 3)},
                       {R(1, 2), R(1, 2), R(3, 2)},
                       DominationVerdict::kPcStrictlyDominates, 1},
        DominationCase{{11, 17, 24},
                       {R(1, 2), R(1), R(3, 2)},
                       {R(1, 2), R(1), R(3, 2)},
                       DominationVerdict::kIdentical, 1},
        DominationCase{{12, 13, 26},
                       {R(2, 3), R(5, 6), R(11, 6)},
                       {R(1, 2), R(1, 2), R(3, 2)},
                       DominationVerdict::kGnsStrictlyDominates, 1},
        DominationCase{{9, 13, 24},
                       {R(1, 6), R(5, 6), R(3, 2)},
                       {R(1, 2), R(1, 2), R(3, 2)},
                       DominationVerdict::kIncomparable, 2}));

TEST(LiftTest, SmartKeepsTheDominantCut) {
  CoverParams p1 = CoverParams::Create(WithExtras({9, 10, 23}), Items({1, 2, 3, 4}));
  auto cuts = LiftSmart(p1);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0].method, LiftMethod::kPc);
  CoverParams p3 = CoverParams::Create(WithExtras({12, 13, 26}), Items({1, 2, 3, 4}));
  cuts = LiftSmart(p3);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0].method, LiftMethod::kGns);
}

TEST(LiftTest, TriviallyEqualWithoutSlopedWeights) {
  CoverParams p = CoverParams::Create(WithExtras({5, 20}), Items({1, 2, 3, 4}));
  EXPECT_EQ(ClassifyDomination(p), DominationVerdict::kTriviallyEqual);
  EXPECT_EQ(LiftPc(p), LiftGns(p));
  EXPECT_EQ(Tail(LiftPc(p), 4), testing::Rationals({0, 1}));
}

TEST(LiftTest, RightEndOfSlopedIntervalGetsItsIndex) {
  CoverParams p = CoverParams::Create(WithExtras({14, 27, 36}), Items({1, 2, 3, 4}));
  for (const Rational& k : {R(0), R(1, 12), R(1, 6)}) {
    EXPECT_EQ(EvalGk(p, LiftParam::Slope(k), 14), R(1, 2) + k * 3);
  }
  EXPECT_EQ(Tail(LiftGns(p), 4), testing::Rationals({1, 2, 3}));
  EXPECT_TRUE(GnsFacetCondition(p));
}

TEST(LiftTest, GeneralSlopeIsConvexCombination) {
  CoverParams p = CoverParams::Create(WithExtras({9, 10, 23}), Items({1, 2, 3, 4}));
  LiftedCut cut = LiftWith(p, LiftParam::Slope(R(1, 12)));
  EXPECT_EQ(Tail(cut, 4), testing::Rationals({R(1, 3), R(5, 12), R(17, 12)}));
  EXPECT_EQ(cut.method, LiftMethod::kGeneralK);
}

TEST(LiftTest, InadmissibleCoverFallsBackToGns) {
  // a = (10, 9, 9), b = 20: lambda = 8, mu_1 - lambda = 2 < rho_1 = 7.
  KnapsackRow row({10, 9, 9, 12}, 20);
  CoverParams p = CoverParams::Create(row, std::vector<int>{0, 1, 2});
  ASSERT_FALSE(p.AdmitsAllSlopes());
  EXPECT_EQ(LiftPc(p), LiftGns(p));
  EXPECT_EQ(LiftPc(p).method, LiftMethod::kGns);
  EXPECT_EQ(LiftSmart(p).size(), 1u);
  try {
    EvalGk(p, LiftParam::Pc(), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  EXPECT_THROW(ClassifyDomination(p), Error);
  EXPECT_NO_THROW(EvalGk(p, LiftParam::Gns(), 5));
}

TEST(LiftTest, EvalGkMatchesReferenceAndConvexIdentity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto rc = testing::MakeAdmissibleCover(rng, 2 + trial % 6, 0, 50);
    CoverParams p = CoverParams::Create(rc.row, rc.cover);
    const Rational k = testing::RandomSlope(rng, p);
    const Rational kr = k * Rational(p.rho1());
    for (int64_t twice = 0; twice <= 2 * rc.row.capacity(); ++twice) {
      const Rational z(twice, 2);
      const Rational g = EvalGk(p, LiftParam::Slope(k), z);
      ASSERT_EQ(g, ReferenceGk(p, p.rho1() > 0 ? k : R(0), z)) << z;
      ASSERT_EQ(g, kr * EvalGk(p, LiftParam::Gns(), z) +
                       (Rational(1) - kr) * EvalGk(p, LiftParam::Pc(), z));
      ASSERT_LE(g, Rational(LiftingFunction(p, z)));
    }
  }
}

TEST(LiftTest, LiftedCutsAreValid) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto rc = testing::MakeRandomCover(rng, 2 + trial % 5, 1 + trial % 7, 60);
    CoverParams p = CoverParams::Create(rc.row, rc.cover);
    for (const LiftedCut& cut : LiftSmart(p)) {
      ASSERT_TRUE(CutValidByEnumeration(rc.row, cut.coefficients, cut.rhs).valid);
    }
    ASSERT_TRUE(CutValid(rc.row, LiftPc(p)).valid);
    ASSERT_TRUE(CutValid(rc.row, LiftGns(p)).valid);
  }
}

TEST(LiftTest, DominationVerdictAgreesWithComparison) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    auto rc = testing::MakeAdmissibleCover(rng, 2 + trial % 5, 1 + trial % 6, 40);
    CoverParams p = CoverParams::Create(rc.row, rc.cover);
    const Dominance d = CompareCuts(LiftPc(p), LiftGns(p));
    const DominationVerdict v = ClassifyDomination(p);
    switch (d) {
      case Dominance::kFirstStrictlyDominates:
        EXPECT_EQ(v, DominationVerdict::kPcStrictlyDominates);
        break;
      case Dominance::kSecondStrictlyDominates:
        EXPECT_EQ(v, DominationVerdict::kGnsStrictlyDominates);
        break;
      case Dominance::kIncomparable:
        EXPECT_EQ(v, DominationVerdict::kIncomparable);
        break;
      case Dominance::kEqual:
        EXPECT_TRUE(v == DominationVerdict::kIdentical ||
                    v == DominationVerdict::kTriviallyEqual);
        break;
    }
  }
}

TEST(FacetConditionTest, WorkedRows) {
  CoverParams facet =
      CoverParams::Create(WithExtras({9, 10, 11, 23}), Items({1, 2, 3, 4}));
  EXPECT_TRUE(PcFacetCondition(facet));
  EXPECT_FALSE(GnsFacetCondition(facet));
  CoverParams case1 = CoverParams::Create(WithExtras({9, 10, 23}), Items({1, 2, 3, 4}));
  EXPECT_FALSE(PcFacetCondition(case1));
  EXPECT_FALSE(GnsFacetCondition(case1));
  CoverParams endpoint = CoverParams::Create(WithExtras({14}), Items({1, 2, 3, 4}));
  EXPECT_TRUE(GnsFacetCondition(endpoint));
  CoverParams flat_only = CoverParams::Create(WithExtras({5, 16}), Items({1, 2, 3, 4}));
  EXPECT_FALSE(PcFacetCondition(flat_only));
  EXPECT_FALSE(GnsFacetCondition(flat_only));
}

TEST(DominationGapTest, WorkedConstruction) {
  GapInstance g = GenerateDominationGapCover(R(1, 10), 3);
  EXPECT_EQ(g.scale, 10);
  EXPECT_EQ(g.row.weights(), (std::vector<int64_t>{100, 90, 90, 81}));
  EXPECT_EQ(g.row.capacity(), 260);
  CoverParams p = CoverParams::Create(g.row, g.cover);
  EXPECT_TRUE(p.AdmitsAllSlopes());
  EXPECT_EQ(LiftPc(p).coefficients[g.gap_item], R(1, 2));
  EXPECT_EQ(LiftGns(p).coefficients[g.gap_item], R(1, 10));
}

TEST(DominationGapTest, GapShrinksWithEpsilon) {
  for (const Rational& eps : {R(1, 2), R(1, 10), R(1, 100), R(1, 1000)}) {
    for (int t : {2, 3, 5, 8}) {
      GapInstance g = GenerateDominationGapCover(eps, t);
      CoverParams p = CoverParams::Create(g.row, g.cover);
      EXPECT_TRUE(p.AdmitsAllSlopes());
      EXPECT_EQ(LiftPc(p).coefficients[g.gap_item], R(1, 2));
      EXPECT_LE(LiftGns(p).coefficients[g.gap_item], eps);
    }
  }
  EXPECT_THROW(GenerateDominationGapCover(R(0), 3), Error);
  EXPECT_THROW(GenerateDominationGapCover(R(1, 10), 1), Error);
}

TEST(TabulatedFunctionTest, InterpolatesLinearly) {
  TabulatedFunction f =
      TabulatedFunction::Sample([](double x) { return x * x; }, 0, 2, 2);
  EXPECT_DOUBLE_EQ(f(0.5), 0.5);
  EXPECT_DOUBLE_EQ(f(1.0), 1.0);
  EXPECT_DOUBLE_EQ(f(1.5), 2.5);
  EXPECT_THROW(TabulatedFunction(0, 0, {1, 2}), Error);
}

TEST(TabulatedFunctionTest, LinearWReproducesGns) {
  CoverParams p = CoverParams::Create(WithExtras({9, 10, 23}), Items({1, 2, 3, 4}));
  const double rho1 = static_cast<double>(p.rho1());
  TabulatedFunction w = TabulatedFunction::Sample(
      [&](double x) { return x / rho1; }, 0, rho1, 60);
  LiftedCut raw = LiftWithW(p, w);
  LiftedCut gns = LiftGns(p);
  for (size_t j = 0; j < gns.coefficients.size(); ++j) {
    EXPECT_NEAR(raw.coefficients[j].ToDouble(), gns.coefficients[j].ToDouble(),
                1e-8);
  }
  EXPECT_EQ(raw.method, LiftMethod::kRawW);
}

TEST(TabulatedFunctionTest, LogisticIsCentred) {
  TabulatedFunction w = LogisticW(0.9, 10);
  EXPECT_NEAR(w(5), 0.5, 1e-9);
  EXPECT_NEAR(w(0), 1 / (1 + std::exp(4.5)), 1e-9);
}

}  // namespace
}  // namespace liftcover
