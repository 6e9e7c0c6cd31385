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

#ifndef LIFTCOVER_BRANCH_AND_CUT_H_
#define LIFTCOVER_BRANCH_AND_CUT_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftcover/cover_gen.h"
#include "liftcover/instances.h"
#include "liftcover/lifting.h"
#include "liftcover/rational.h"
#include "liftcover/simplex.h"

namespace liftcover {

enum class LiftingMode { kNone, kPc, kGns, kSmart };
const char* LiftingModeName(LiftingMode mode);
std::optional<LiftingMode> ParseLiftingMode(std::string_view name);

enum class NodeSelection { kBestBound, kDepthFirst };

// Minimum violation alpha.x - rhs for a cut to count as separating.
inline constexpr double kSeparationTolerance = 1e-7;

struct BncConfig {
  int per_node_cut_limit = 10;
  std::optional<int64_t> total_cut_limit;
  LiftingMode lifting = LiftingMode::kPc;
  std::vector<CoverMethod> cover_methods = {CoverMethod::kContiguous};
  NodeSelection node_selection = NodeSelection::kBestBound;
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  std::optional<int64_t> node_limit;
  double integrality_tolerance = 1e-6;
  // Recorded in results; the search itself is deterministic.
  uint64_t seed = 0;
  // Called for every cut added to the pool, with its source knapsack row
  // and the cut in that row's item space.
  std::function<void(const KnapsackRow&, const LiftedCut&)> cut_observer;

  // Stable text form of the settings that influence the search.
  std::string Fingerprint() const;
};

struct BncStats {
  int64_t tree_size = 0;  // nodes whose LP was solved
  int64_t cuts_generated = 0;
  int64_t cuts_added = 0;
  std::optional<int64_t> incumbent;
  bool proven_optimal = false;
  double wall_time = 0;
  int64_t lp_iterations = 0;
  std::optional<double> root_bound;            // before the root cut round
  std::optional<double> root_bound_after_cuts;
};

// A lifted cover cut expressed over the instance variables.
struct InstanceCut {
  std::vector<Rational> coefficients;
  Rational rhs;
  int source_row = -1;
  LiftedCut lifted;  // in the item space of the source row
  double efficacy = 0;
};

// The LP relaxation: instance rows, objective and normalization bounds.
LpModel RelaxationModel(const IpInstance& instance);

// Values y of the knapsack items of a normalized row at the point x.
LpPoint RowPoint(const IpInstance& instance, int row, const LpPoint& x);
// Objective in the item space of a row (negated on complemented items).
std::vector<int64_t> RowObjective(const IpInstance& instance, int row);

// Rewrites a cut over the items of a row as a cut over the instance
// variables.
InstanceCut ToInstanceCut(const IpInstance& instance, int row,
                          LiftedCut lifted);

// (alpha.x - rhs) / ||alpha||_2; throws kInvalidArgument for alpha = 0.
double Efficacy(std::span<const Rational> coefficients, const Rational& rhs,
                std::span<const double> x);
double Efficacy(const LiftedCut& cut, const LpPoint& x);

// Every distinct separating lifted cut for x, by decreasing efficacy.
std::vector<InstanceCut> SeparatingCuts(const IpInstance& instance,
                                        const LpPoint& x,
                                        const BncConfig& config);

// The first min(l, count) entries of SeparatingCuts.
std::vector<InstanceCut> NodeCutRound(const IpInstance& instance,
                                      const LpPoint& x,
                                      const BncConfig& config);

enum class BncStatus { kOptimal, kInfeasible, kStopped };
const char* BncStatusName(BncStatus status);

struct BncResult {
  BncStatus status = BncStatus::kStopped;
  std::optional<int64_t> optimum;  // best incumbent value
  std::vector<int> x;              // best incumbent point
  BncStats stats;
};

// Best-first branch and bound on most-fractional variables with one round
// of lifted cover cuts per node, added to a global pool.
BncResult Solve(const IpInstance& instance, const BncConfig& config);

}  // namespace liftcover

#endif  // LIFTCOVER_BRANCH_AND_CUT_H_
