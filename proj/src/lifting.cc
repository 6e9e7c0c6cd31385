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

#include <algorithm>
#include <cmath>

#include "liftcover/error.h"

namespace liftcover {
namespace {

constexpr int64_t kRealCutDenominator = 1000000000;

LiftedCut MakeCut(const CoverParams& params, LiftMethod method,
                  const Rational& k,
                  const std::function<Rational(int64_t)>& coefficient) {
  const KnapsackRow& row = params.row();
  LiftedCut cut;
  cut.coefficients.resize(row.size());
  for (int j = 0; j < row.size(); ++j) {
    cut.coefficients[j] =
        params.InCover(j) ? Rational(1) : coefficient(row.weight(j));
  }
  cut.rhs = params.t() - 1;
  cut.cover = params.cover();
  cut.method = method;
  cut.k = k;
  return cut;
}

}  // namespace

Rational LiftParam::SlopeFor(const CoverParams& params) const {
  const int64_t rho1 = params.rho1();
  if (gns_) return rho1 > 0 ? Rational(1, rho1) : Rational(0);
  if (k_.Sign() < 0 || (rho1 > 0 && k_ > Rational(1, rho1))) {
    throw Error(ErrorCode::kInvalidArgument,
                "slope " + k_.ToString() + " outside [0, 1/rho_1] = [0, 1/" +
                    std::to_string(rho1) + "]");
  }
  return rho1 > 0 ? k_ : Rational(0);
}

std::string LiftParam::ToString() const {
  if (gns_) return "gns";
  if (k_.IsZero()) return "pc";
  return "k=" + k_.ToString();
}

const char* LiftMethodName(LiftMethod method) {
  switch (method) {
    case LiftMethod::kPc: return "pc";
    case LiftMethod::kGns: return "gns";
    case LiftMethod::kGeneralK: return "k";
    case LiftMethod::kRawW: return "raw-w";
  }
  return "?";
}

std::string LiftedCut::CoefficientString() const {
  std::string out;
  for (size_t j = 0; j < coefficients.size(); ++j) {
    if (j > 0) out += ", ";
    out += coefficients[j].ToString();
  }
  return out;
}

Rational EvalGk(const CoverParams& params, const LiftParam& param,
                const Rational& z) {
  const int64_t b = params.row().capacity();
  if (z.Sign() < 0 || z > b) {
    throw Error(ErrorCode::kInvalidArgument,
                "g_k argument " + z.ToString() + " outside [0, " +
                    std::to_string(b) + "]");
  }
  const int64_t rho1 = params.rho1();
  const Rational k = param.SlopeFor(params);
  const bool is_gns = param.is_gns() || (rho1 > 0 && k == Rational(1, rho1));
  if (!params.AdmitsAllSlopes() && !is_gns) {
    throw Error(ErrorCode::kPreconditionViolated,
                "mu_1 - lambda = " +
                    std::to_string(params.mu(1) - params.lambda()) +
                    " < rho_1 = " + std::to_string(rho1) +
                    "; only the GNS slope is superadditive");
  }
  const IntervalLocation loc = params.Partition().Locate(z);
  switch (loc.kind) {
    case IntervalLocation::Kind::kZero:
      return 0;
    case IntervalLocation::Kind::kFlat:
      return loc.h;
    case IntervalLocation::Kind::kSloped: {
      const int h = loc.h;
      const Rational x =
          Rational(params.mu(h) - params.lambda() + params.rho(h)) - z;
      const Rational w = k * x + (Rational(1) - k * rho1) / 2;
      return Rational(h) - w;
    }
  }
  return 0;
}

LiftedCut LiftWith(const CoverParams& params, const LiftParam& param) {
  const Rational k = param.SlopeFor(params);
  LiftMethod method = param.is_gns()   ? LiftMethod::kGns
                      : k.IsZero()     ? LiftMethod::kPc
                                       : LiftMethod::kGeneralK;
  return MakeCut(params, method, k, [&](int64_t a) {
    return EvalGk(params, param, Rational(a));
  });
}

LiftedCut LiftPc(const CoverParams& params) {
  if (!params.AdmitsAllSlopes()) return LiftGns(params);
  return LiftWith(params, LiftParam::Pc());
}

LiftedCut LiftGns(const CoverParams& params) {
  return LiftWith(params, LiftParam::Gns());
}

std::vector<LiftedCut> LiftSmart(const CoverParams& params) {
  if (!params.AdmitsAllSlopes()) return {LiftGns(params)};
  LiftedCut pc = LiftWith(params, LiftParam::Pc());
  LiftedCut gns = LiftGns(params);
  switch (CompareCuts(pc, gns)) {
    case Dominance::kEqual:
    case Dominance::kFirstStrictlyDominates:
      return {std::move(pc)};
    case Dominance::kSecondStrictlyDominates:
      return {std::move(gns)};
    case Dominance::kIncomparable:
      break;
  }
  return {std::move(pc), std::move(gns)};
}

Dominance CompareCuts(const LiftedCut& first, const LiftedCut& second) {
  if (first.coefficients.size() != second.coefficients.size() ||
      first.rhs != second.rhs) {
    throw Error(ErrorCode::kInvalidArgument,
                "cuts must share dimension and right-hand side");
  }
  bool first_greater = false;
  bool second_greater = false;
  for (size_t j = 0; j < first.coefficients.size(); ++j) {
    if (first.coefficients[j] > second.coefficients[j]) first_greater = true;
    if (first.coefficients[j] < second.coefficients[j]) second_greater = true;
  }
  if (first_greater && second_greater) return Dominance::kIncomparable;
  if (first_greater) return Dominance::kFirstStrictlyDominates;
  if (second_greater) return Dominance::kSecondStrictlyDominates;
  return Dominance::kEqual;
}

const char* DominationVerdictName(DominationVerdict verdict) {
  switch (verdict) {
    case DominationVerdict::kPcStrictlyDominates: return "PC_STRICTLY_DOMINATES";
    case DominationVerdict::kIdentical: return "IDENTICAL";
    case DominationVerdict::kGnsStrictlyDominates: return "GNS_STRICTLY_DOMINATES";
    case DominationVerdict::kIncomparable: return "INCOMPARABLE";
    case DominationVerdict::kTriviallyEqual: return "TRIVIALLY_EQUAL";
  }
  return "?";
}

DominationVerdict ClassifyDomination(const CoverParams& params) {
  if (!params.AdmitsAllSlopes()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "domination taxonomy needs mu_1 - lambda >= rho_1");
  }
  const IntervalPartition& part = params.Partition();
  const int64_t rho1 = params.rho1();
  bool any_sloped = false;
  bool all_pc_ge = true;     // rho_h > rho_1/2 and a_j <= midpoint
  bool any_pc_gt = false;    // ... strictly below the midpoint
  bool all_gns_gt = true;    // rho_h <= rho_1/2 or a_j > midpoint
  for (int j = 0; j < params.row().size(); ++j) {
    if (params.InCover(j)) continue;
    const int64_t a = params.row().weight(j);
    IntervalLocation loc = part.Locate(Rational(a));
    if (loc.kind != IntervalLocation::Kind::kSloped) continue;
    any_sloped = true;
    const int h = loc.h;
    // Compare 2 a_j with 2 (mu_h - lambda + rho_h) - rho_1 to stay integral.
    const int64_t twice_mid =
        2 * (params.mu(h) - params.lambda() + params.rho(h)) - rho1;
    const bool wide = 2 * params.rho(h) > rho1;
    if (!(wide && 2 * a <= twice_mid)) all_pc_ge = false;
    if (wide && 2 * a < twice_mid) any_pc_gt = true;
    if (!(!wide || 2 * a > twice_mid)) all_gns_gt = false;
  }
  if (!any_sloped) return DominationVerdict::kTriviallyEqual;
  if (all_pc_ge && any_pc_gt) return DominationVerdict::kPcStrictlyDominates;
  if (all_pc_ge) return DominationVerdict::kIdentical;
  if (all_gns_gt) return DominationVerdict::kGnsStrictlyDominates;
  return DominationVerdict::kIncomparable;
}

bool PcFacetCondition(const CoverParams& params) {
  const int64_t rho1 = params.rho1();
  if (!params.AdmitsAllSlopes() || rho1 <= 0) return false;
  const IntervalPartition& part = params.Partition();
  int in_first_slope = 0;
  for (int j = 0; j < params.row().size(); ++j) {
    if (params.InCover(j)) continue;
    const int64_t a = params.row().weight(j);
    IntervalLocation loc = part.Locate(Rational(a));
    const int h = loc.h;
    if (loc.kind == IntervalLocation::Kind::kSloped) {
      if (h == 1) ++in_first_slope;
      const int64_t twice_mid =
          2 * (params.mu(h) - params.lambda() + params.rho(h)) - rho1;
      if (!(2 * params.rho(h) > rho1 && 2 * a <= twice_mid)) return false;
    } else if (loc.kind == IntervalLocation::Kind::kFlat) {
      if (a < params.mu(h)) return false;
    }
  }
  return in_first_slope >= 3;
}

bool GnsFacetCondition(const CoverParams& params) {
  const IntervalPartition& part = params.Partition();
  bool any = false;
  for (int j = 0; j < params.row().size(); ++j) {
    if (params.InCover(j)) continue;
    const int64_t a = params.row().weight(j);
    IntervalLocation loc = part.Locate(Rational(a));
    if (loc.kind != IntervalLocation::Kind::kSloped) continue;
    if (a != part.sloped[loc.h - 1].hi) return false;
    any = true;
  }
  return any;
}

GapInstance GenerateDominationGapCover(const Rational& epsilon, int t) {
  if (epsilon.Sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (t < 2) throw Error(ErrorCode::kInvalidArgument, "cover size must be >= 2");
  // Base data: a_1 = 10, a_2 = ... = a_t = 9, b = sum - 2, so lambda' = 2 and
  // a_1 - lambda' = 8 >= a_2 - a_1 + lambda' = 1 > 0.
  const int64_t a1 = 10, a_rest = 9, excess = 2;
  const int64_t base_b = a1 + a_rest * (t - 1) - excess;
  const int64_t gap = a_rest - a1 + excess;
  const int64_t scale = (Rational(1) / (epsilon * gap)).Ceil();
  std::vector<int64_t> weights;
  weights.push_back(scale * a1);
  for (int i = 1; i < t; ++i) weights.push_back(scale * a_rest);
  weights.push_back(1 + scale * (a1 - excess));
  std::vector<int> cover(t);
  for (int i = 0; i < t; ++i) cover[i] = i;
  return GapInstance{KnapsackRow(std::move(weights), scale * base_b),
                     std::move(cover), t, scale};
}

TabulatedFunction::TabulatedFunction(double lo, double hi,
                                     std::vector<double> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  if (values_.size() < 2 || !(hi_ > lo_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tabulated function needs at least two knots on a proper "
                "interval");
  }
}

TabulatedFunction TabulatedFunction::Sample(
    const std::function<double(double)>& fn, double lo, double hi,
    int intervals) {
  std::vector<double> values(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    values[i] = fn(lo + (hi - lo) * i / intervals);
  }
  return TabulatedFunction(lo, hi, std::move(values));
}

double TabulatedFunction::knot(int i) const {
  return lo_ + (hi_ - lo_) * i / intervals();
}

double TabulatedFunction::operator()(double x) const {
  constexpr double kSlack = 1e-12;
  if (x < lo_ - kSlack * (hi_ - lo_) || x > hi_ + kSlack * (hi_ - lo_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "w evaluated outside its domain [" + std::to_string(lo_) +
                    ", " + std::to_string(hi_) + "]");
  }
  const double pos = std::clamp((x - lo_) / (hi_ - lo_), 0.0, 1.0) *
                     intervals();
  int i = std::min(static_cast<int>(pos), intervals() - 1);
  const double frac = pos - i;
  return values_[i] + frac * (values_[i + 1] - values_[i]);
}

TabulatedFunction LogisticW(double steepness, double rho1, int intervals) {
  return TabulatedFunction::Sample(
      [=](double x) {
        return 1.0 / (1.0 + std::exp(-steepness * (x - rho1 / 2.0)));
      },
      0.0, rho1, intervals);
}

double EvalGw(const CoverParams& params, const TabulatedFunction& w,
              const Rational& z) {
  const int64_t b = params.row().capacity();
  if (z.Sign() < 0 || z > b) {
    throw Error(ErrorCode::kInvalidArgument,
                "g_w argument " + z.ToString() + " outside [0, b]");
  }
  const IntervalLocation loc = params.Partition().Locate(z);
  switch (loc.kind) {
    case IntervalLocation::Kind::kZero:
      return 0.0;
    case IntervalLocation::Kind::kFlat:
      return loc.h;
    case IntervalLocation::Kind::kSloped: {
      const int h = loc.h;
      const double x = (Rational(params.mu(h) - params.lambda() +
                                 params.rho(h)) - z).ToDouble();
      return h - w(x);
    }
  }
  return 0.0;
}

LiftedCut LiftWithW(const CoverParams& params, const TabulatedFunction& w) {
  return MakeCut(params, LiftMethod::kRawW, Rational(0), [&](int64_t a) {
    return Rational::FromDouble(EvalGw(params, w, Rational(a)),
                                kRealCutDenominator);
  });
}

}  // namespace liftcover
