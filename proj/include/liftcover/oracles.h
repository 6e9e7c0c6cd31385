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

#ifndef LIFTCOVER_ORACLES_H_
#define LIFTCOVER_ORACLES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liftcover/instances.h"
#include "liftcover/knapsack.h"
#include "liftcover/lifting.h"
#include "liftcover/piecewise.h"
#include "liftcover/rational.h"

namespace liftcover {

// Brute-force verifiers. None of them calls the closed-form code they are
// meant to check.

inline constexpr int kMaxBruteForceCover = 25;
inline constexpr int kMaxEnumerationItems = 22;
inline constexpr int kMaxFacetItems = 14;
inline constexpr int kMaxTSetSize = 16;

// |C| - 1 minus the most cover items that fit into capacity b - z.
int64_t LiftingFunctionBruteForce(const KnapsackRow& row,
                                  std::span<const int> cover,
                                  const Rational& z);

struct ValidityReport {
  bool valid = true;
  // Lexicographically smallest feasible 0-1 point violating the cut.
  std::vector<int> witness;
  // max alpha.x over feasible 0-1 points.
  Rational max_lhs;
};

// Exact check of alpha.x <= rhs over all 0-1 points of the row. Uses a
// capacity-indexed table when n * (b + 1) is small, enumeration for n <= 22,
// and throws kBudgetExceeded otherwise.
ValidityReport CutValid(const KnapsackRow& row,
                        std::span<const Rational> coefficients,
                        const Rational& rhs);
ValidityReport CutValid(const KnapsackRow& row, const LiftedCut& cut);

// Plain 2^n enumeration; n <= 22.
ValidityReport CutValidByEnumeration(const KnapsackRow& row,
                                     std::span<const Rational> coefficients,
                                     const Rational& rhs);

struct FacetReport {
  bool is_valid = false;
  std::vector<std::vector<int>> tight_points;
  // Dimension of the affine hull of the tight points; -1 if there are none.
  int affine_rank = -1;
  bool is_facet = false;
};

// Enumerates the feasible points (n <= 14) and computes the face dimension
// by exact elimination.
FacetReport FacetReportFor(const KnapsackRow& row,
                           std::span<const Rational> coefficients,
                           const Rational& rhs);
FacetReport FacetReportFor(const KnapsackRow& row, const LiftedCut& cut);

// Constraint system on the fractional parts of lifted coefficients.
struct TPolyhedron {
  std::vector<int> j_set;       // items outside C with a_j > mu_{h(j)+1} - lambda
  std::vector<int> i_set;       // remaining items outside C
  std::vector<int64_t> h;       // h(j) for every item outside C, else -1
  std::vector<std::vector<int>> q_family;  // positions into j_set
  std::vector<int64_t> rhs;     // f(a(Q)) - sum_{j in Q} h(j)
};

TPolyhedron BuildTPolyhedron(const KnapsackRow& row, std::span<const int> cover);

// delta is indexed like j_set.
bool TVertexCheck(const TPolyhedron& tp, std::span<const Rational> delta);

// Facet test through T: cover coefficients 1, rhs |C| - 1, alpha_j = h(j)
// on I and alpha_j - h(j) in [0, 1] forming a vertex of T on J.
bool FacetViaT(const KnapsackRow& row, const TPolyhedron& tp,
               std::span<const int> cover, const LiftedCut& cut);

// The generalized function built from sequences u, v and slope k with
// pieces h = 0..horizon-1.
PiecewiseLinear<Rational> TildeG(std::span<const Rational> u,
                                 std::span<const Rational> v,
                                 const Rational& k, int horizon);

// Superadditivity of TildeG on [0, M_horizon]. The sequences must be
// non-increasing and non-negative with v_1 > 0, u_i + v_i > 0 and
// 0 <= k <= 1/v_1; u_1 >= v_1 is not required.
std::optional<SuperadditivityViolation<Rational>> TildeGCheck(
    std::span<const Rational> u, std::span<const Rational> v,
    const Rational& k, int horizon);

struct ExactOptimum {
  int64_t value = 0;
  std::vector<int> x;
};

// Depth-first search with per-row fractional-knapsack bounds; returns
// nothing for infeasible programs.
std::optional<ExactOptimum> SolveExactly(const IpInstance& instance);

// Plain enumeration, n <= 24.
std::optional<ExactOptimum> SolveByEnumeration(const IpInstance& instance);

}  // namespace liftcover

#endif  // LIFTCOVER_ORACLES_H_
