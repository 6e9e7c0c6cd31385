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

#ifndef LIFTCOVER_LIFTING_H_
#define LIFTCOVER_LIFTING_H_

#include <functional>
#include <string>
#include <vector>

#include "liftcover/knapsack.h"
#include "liftcover/rational.h"

namespace liftcover {

// Slope parameter k of w_k(x) = k x + (1 - k rho_1) / 2. k = 0 is the
// piecewise-constant (PC) function, k = 1/rho_1 the GNS function. GNS is
// kept symbolic so that it also makes sense when rho_1 = 0 (no sloped
// intervals).
class LiftParam {
 public:
  static LiftParam Pc() { return LiftParam(false, Rational(0)); }
  static LiftParam Gns() { return LiftParam(true, Rational(0)); }
  static LiftParam Slope(Rational k) { return LiftParam(false, k); }

  bool is_gns() const { return gns_; }
  // The concrete slope for a given cover; throws kInvalidArgument when k is
  // outside [0, 1/rho_1].
  Rational SlopeFor(const CoverParams& params) const;
  std::string ToString() const;

 private:
  LiftParam(bool gns, Rational k) : gns_(gns), k_(k) {}
  bool gns_;
  Rational k_;
};

enum class LiftMethod { kPc, kGns, kGeneralK, kRawW };
const char* LiftMethodName(LiftMethod method);

// sum_{j in C} x_j + sum_{j not in C} alpha_j x_j <= |C| - 1, with exact
// coefficients indexed by the row's items.
struct LiftedCut {
  std::vector<Rational> coefficients;
  Rational rhs;
  std::vector<int> cover;  // ascending item indices
  LiftMethod method = LiftMethod::kPc;
  Rational k;              // slope actually used (kGeneralK / kPc / kGns)

  // Coefficients as "a, b, c" with exact rationals.
  std::string CoefficientString() const;
  friend bool operator==(const LiftedCut& a, const LiftedCut& b) {
    return a.coefficients == b.coefficients && a.rhs == b.rhs;
  }
};

// g_k(z). Throws kPreconditionViolated when mu_1 - lambda < rho_1 and the
// parameter is not GNS (the function is then not superadditive).
Rational EvalGk(const CoverParams& params, const LiftParam& param,
                const Rational& z);

// Lifts every non-cover item of the row with g_k.
LiftedCut LiftWith(const CoverParams& params, const LiftParam& param);

// PC lifting; falls back to GNS (and tags the cut kGns) when
// mu_1 - lambda < rho_1.
LiftedCut LiftPc(const CoverParams& params);
LiftedCut LiftGns(const CoverParams& params);

// Both liftings when PC applies, minus any cut dominated by the other; a
// single cut when they coincide. GNS only otherwise.
std::vector<LiftedCut> LiftSmart(const CoverParams& params);

enum class Dominance {
  kFirstStrictlyDominates,
  kEqual,
  kSecondStrictlyDominates,
  kIncomparable,
};

// Coefficient-wise comparison of two cuts with identical right-hand sides.
Dominance CompareCuts(const LiftedCut& first, const LiftedCut& second);

enum class DominationVerdict {
  kPcStrictlyDominates,
  kIdentical,
  kGnsStrictlyDominates,
  kIncomparable,
  kTriviallyEqual,
};
const char* DominationVerdictName(DominationVerdict verdict);

// Case analysis on where the non-cover weights fall inside the sloped
// intervals. Requires mu_1 - lambda >= rho_1.
DominationVerdict ClassifyDomination(const CoverParams& params);

// Sufficient condition for the PC cut to be facet-defining.
bool PcFacetCondition(const CoverParams& params);
// Every non-cover weight inside a sloped interval sits on its right end
// (and at least one does): GNS lifting is then facet-defining.
bool GnsFacetCondition(const CoverParams& params);

struct GapInstance {
  KnapsackRow row;
  std::vector<int> cover;
  int gap_item;
  int64_t scale;  // M
};

// A row whose single non-cover item gets PC coefficient 1/2 but GNS
// coefficient 1/M <= epsilon. Base cover: one item of weight 10, t-1 of
// weight 9, excess 2; everything scaled by M = ceil(1/epsilon).
GapInstance GenerateDominationGapCover(const Rational& epsilon, int t);

// Real-valued function on [lo, hi] sampled at uniform knots and linearly
// interpolated in between.
class TabulatedFunction {
 public:
  TabulatedFunction(double lo, double hi, std::vector<double> values);
  static TabulatedFunction Sample(const std::function<double(double)>& fn,
                                  double lo, double hi, int intervals);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int intervals() const { return static_cast<int>(values_.size()) - 1; }
  double knot(int i) const;
  double value(int i) const { return values_[i]; }
  double operator()(double x) const;

 private:
  double lo_, hi_;
  std::vector<double> values_;
};

// Logistic w(x) = 1 / (1 + exp(-steepness (x - rho_1/2))) tabulated on
// [0, rho_1].
TabulatedFunction LogisticW(double steepness, double rho1,
                            int intervals = 10000);

// The g_w template with an arbitrary w. No superadditivity guarantee; only
// used to reproduce counterexamples. Accurate to about 1e-9 per evaluation.
double EvalGw(const CoverParams& params, const TabulatedFunction& w,
              const Rational& z);

// Lifted cut built from g_w; coefficients are rounded to multiples of 1e-9.
LiftedCut LiftWithW(const CoverParams& params, const TabulatedFunction& w);

}  // namespace liftcover

#endif  // LIFTCOVER_LIFTING_H_
