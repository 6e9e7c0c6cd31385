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

#include "liftcover/oracles.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "liftcover/error.h"

namespace liftcover {
namespace {

constexpr int64_t kMaxTableCells = 5'000'000;

void CheckCut(const KnapsackRow& row, std::span<const Rational> coefficients) {
  if (static_cast<int>(coefficients.size()) != row.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cut has " + std::to_string(coefficients.size()) +
                    " coefficients but the row has " +
                    std::to_string(row.size()) + " items");
  }
}

// Multiplies the cut by the lcm of its denominators.
struct ScaledCut {
  std::vector<int64_t> alpha;
  int64_t rhs;
  int64_t scale;
};

ScaledCut Scale(std::span<const Rational> coefficients, const Rational& rhs) {
  int64_t d = rhs.den();
  for (const Rational& c : coefficients) d = Lcm(d, c.den());
  ScaledCut out;
  out.scale = d;
  for (const Rational& c : coefficients) {
    out.alpha.push_back((c * Rational(d)).num());
  }
  out.rhs = (rhs * Rational(d)).num();
  return out;
}

// Adds v to the echelon basis if it is independent; returns true if so.
bool AddToEchelon(std::vector<std::vector<Rational>>& basis,
                  std::vector<int>& pivots, std::vector<Rational> v) {
  for (size_t r = 0; r < basis.size(); ++r) {
    const int p = pivots[r];
    if (v[p].IsZero()) continue;
    const Rational factor = v[p] / basis[r][p];
    for (size_t c = 0; c < v.size(); ++c) {
      if (!basis[r][c].IsZero()) v[c] = v[c] - factor * basis[r][c];
    }
  }
  for (size_t c = 0; c < v.size(); ++c) {
    if (!v[c].IsZero()) {
      pivots.push_back(static_cast<int>(c));
      basis.push_back(std::move(v));
      return true;
    }
  }
  return false;
}

std::vector<int> BitsToPoint(uint64_t mask, int n) {
  std::vector<int> x(n);
  for (int j = 0; j < n; ++j) x[j] = static_cast<int>((mask >> (n - 1 - j)) & 1);
  return x;
}

}  // namespace

int64_t LiftingFunctionBruteForce(const KnapsackRow& row,
                                  std::span<const int> cover,
                                  const Rational& z) {
  if (static_cast<int>(cover.size()) > kMaxBruteForceCover) {
    throw Error(ErrorCode::kBudgetExceeded,
                "cover has " + std::to_string(cover.size()) +
                    " items; the brute-force limit is " +
                    std::to_string(kMaxBruteForceCover));
  }
  if (z < Rational(0) || z > Rational(row.capacity())) {
    throw Error(ErrorCode::kInvalidArgument,
                "z = " + z.ToString() + " outside [0, b]");
  }
  const int t = static_cast<int>(cover.size());
  const int64_t room = (Rational(row.capacity()) - z).Floor();
  // lightest[k]: least total weight of k cover items.
  constexpr int64_t kInf = INT64_MAX / 4;
  std::vector<int64_t> lightest(t + 1, kInf);
  lightest[0] = 0;
  for (int j : cover) {
    if (j < 0 || j >= row.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "cover item out of range");
    }
    for (int k = t; k >= 1; --k) {
      if (lightest[k - 1] < kInf) {
        lightest[k] = std::min(lightest[k], lightest[k - 1] + row.weight(j));
      }
    }
  }
  int fit = 0;
  for (int k = 0; k <= t; ++k) {
    if (lightest[k] <= room) fit = k;
  }
  return t - 1 - fit;
}

ValidityReport CutValidByEnumeration(const KnapsackRow& row,
                                     std::span<const Rational> coefficients,
                                     const Rational& rhs) {
  CheckCut(row, coefficients);
  const int n = row.size();
  if (n > kMaxEnumerationItems) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration limited to " +
                    std::to_string(kMaxEnumerationItems) + " items, row has " +
                    std::to_string(n));
  }
  const ScaledCut cut = Scale(coefficients, rhs);
  ValidityReport report;
  bool have_max = false;
  int64_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    int64_t weight = 0, lhs = 0;
    for (int j = 0; j < n; ++j) {
      if ((mask >> (n - 1 - j)) & 1) {
        weight += row.weight(j);
        lhs += cut.alpha[j];
      }
    }
    if (weight > row.capacity()) continue;
    if (!have_max || lhs > best) best = lhs;
    have_max = true;
    if (lhs > cut.rhs && report.valid) {
      report.valid = false;
      report.witness = BitsToPoint(mask, n);
    }
  }
  report.max_lhs = Rational(best, cut.scale);
  return report;
}

ValidityReport CutValid(const KnapsackRow& row,
                        std::span<const Rational> coefficients,
                        const Rational& rhs) {
  CheckCut(row, coefficients);
  const int n = row.size();
  const int64_t b = row.capacity();
  if ((b + 1) > kMaxTableCells / (n + 1)) {
    return CutValidByEnumeration(row, coefficients, rhs);
  }
  const ScaledCut cut = Scale(coefficients, rhs);
  const int64_t width = b + 1;
  // best[j * width + c]: max alpha.x over items j.. within capacity c.
  std::vector<int64_t> best(static_cast<size_t>((n + 1) * width), 0);
  for (int j = n - 1; j >= 0; --j) {
    const int64_t a = row.weight(j);
    const int64_t* next = &best[(j + 1) * width];
    int64_t* cur = &best[j * width];
    for (int64_t c = 0; c <= b; ++c) {
      int64_t v = next[c];
      if (a <= c) v = std::max(v, cut.alpha[j] + next[c - a]);
      cur[c] = v;
    }
  }
  ValidityReport report;
  report.max_lhs = Rational(best[b], cut.scale);
  if (best[b] <= cut.rhs) return report;
  report.valid = false;
  report.witness.assign(n, 0);
  int64_t value = 0, room = b;
  for (int j = 0; j < n; ++j) {
    if (value + best[(j + 1) * width + room] > cut.rhs) continue;
    report.witness[j] = 1;
    value += cut.alpha[j];
    room -= row.weight(j);
  }
  return report;
}

ValidityReport CutValid(const KnapsackRow& row, const LiftedCut& cut) {
  return CutValid(row, cut.coefficients, cut.rhs);
}

FacetReport FacetReportFor(const KnapsackRow& row,
                           std::span<const Rational> coefficients,
                           const Rational& rhs) {
  CheckCut(row, coefficients);
  const int n = row.size();
  if (n > kMaxFacetItems) {
    throw Error(ErrorCode::kBudgetExceeded,
                "facet enumeration limited to " +
                    std::to_string(kMaxFacetItems) + " items, row has " +
                    std::to_string(n));
  }
  const ScaledCut cut = Scale(coefficients, rhs);
  FacetReport report;
  report.is_valid = true;
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivots;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    int64_t weight = 0, lhs = 0;
    for (int j = 0; j < n; ++j) {
      if ((mask >> (n - 1 - j)) & 1) {
        weight += row.weight(j);
        lhs += cut.alpha[j];
      }
    }
    if (weight > row.capacity()) continue;
    if (lhs > cut.rhs) report.is_valid = false;
    if (lhs != cut.rhs) continue;
    std::vector<int> x = BitsToPoint(mask, n);
    if (!report.tight_points.empty() && static_cast<int>(basis.size()) < n) {
      const std::vector<int>& x0 = report.tight_points.front();
      std::vector<Rational> diff(n);
      for (int j = 0; j < n; ++j) diff[j] = Rational(x[j] - x0[j]);
      AddToEchelon(basis, pivots, std::move(diff));
    }
    report.tight_points.push_back(std::move(x));
  }
  report.affine_rank = report.tight_points.empty()
                           ? -1
                           : static_cast<int>(basis.size());
  report.is_facet = report.is_valid && report.affine_rank == n - 1;
  return report;
}

FacetReport FacetReportFor(const KnapsackRow& row, const LiftedCut& cut) {
  return FacetReportFor(row, cut.coefficients, cut.rhs);
}

TPolyhedron BuildTPolyhedron(const KnapsackRow& row,
                             std::span<const int> cover) {
  if (!IsMinimalCover(row, cover)) {
    throw Error(ErrorCode::kNotMinimal, "items do not form a minimal cover");
  }
  std::vector<int64_t> sorted;
  for (int j : cover) sorted.push_back(row.weight(j));
  std::sort(sorted.rbegin(), sorted.rend());
  const int t = static_cast<int>(sorted.size());
  std::vector<int64_t> mu(t + 1, 0);
  for (int h = 1; h <= t; ++h) mu[h] = mu[h - 1] + sorted[h - 1];
  const int64_t lambda = mu[t] - row.capacity();

  std::vector<bool> in_cover(row.size(), false);
  for (int j : cover) in_cover[j] = true;
  TPolyhedron tp;
  tp.h.assign(row.size(), -1);
  for (int j = 0; j < row.size(); ++j) {
    if (in_cover[j]) continue;
    int h = 0;
    while (h + 1 <= t && mu[h + 1] <= row.weight(j)) ++h;
    tp.h[j] = h;
    if (row.weight(j) > mu[h + 1] - lambda) {
      tp.j_set.push_back(j);
    } else {
      tp.i_set.push_back(j);
    }
  }
  const int s = static_cast<int>(tp.j_set.size());
  if (s > kMaxTSetSize) {
    throw Error(ErrorCode::kBudgetExceeded,
                "|J| = " + std::to_string(s) + " exceeds the limit of " +
                    std::to_string(kMaxTSetSize));
  }
  for (uint32_t mask = 1; mask < (uint32_t{1} << s); ++mask) {
    int64_t weight = 0, hsum = 0;
    std::vector<int> q;
    for (int p = 0; p < s; ++p) {
      if ((mask >> p) & 1) {
        q.push_back(p);
        weight += row.weight(tp.j_set[p]);
        hsum += tp.h[tp.j_set[p]];
      }
    }
    if (weight > row.capacity()) continue;
    tp.rhs.push_back(LiftingFunctionBruteForce(row, cover, Rational(weight)) -
                     hsum);
    tp.q_family.push_back(std::move(q));
  }
  return tp;
}

bool TVertexCheck(const TPolyhedron& tp, std::span<const Rational> delta) {
  const int s = static_cast<int>(tp.j_set.size());
  if (static_cast<int>(delta.size()) != s) {
    throw Error(ErrorCode::kDimensionMismatch,
                "delta has " + std::to_string(delta.size()) +
                    " entries, |J| = " + std::to_string(s));
  }
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivots;
  for (size_t i = 0; i < tp.q_family.size(); ++i) {
    Rational lhs(0);
    for (int p : tp.q_family[i]) lhs += delta[p];
    if (lhs > Rational(tp.rhs[i])) return false;
    if (lhs == Rational(tp.rhs[i]) && static_cast<int>(basis.size()) < s) {
      std::vector<Rational> row(s, Rational(0));
      for (int p : tp.q_family[i]) row[p] = Rational(1);
      AddToEchelon(basis, pivots, std::move(row));
    }
  }
  return static_cast<int>(basis.size()) == s;
}

bool FacetViaT(const KnapsackRow& row, const TPolyhedron& tp,
               std::span<const int> cover, const LiftedCut& cut) {
  CheckCut(row, cut.coefficients);
  if (cut.rhs != Rational(static_cast<int64_t>(cover.size()) - 1)) return false;
  for (int j : cover) {
    if (cut.coefficients[j] != Rational(1)) return false;
  }
  for (int j : tp.i_set) {
    if (cut.coefficients[j] != Rational(tp.h[j])) return false;
  }
  std::vector<Rational> delta;
  for (int j : tp.j_set) {
    Rational d = cut.coefficients[j] - Rational(tp.h[j]);
    if (d < Rational(0) || d > Rational(1)) return false;
    delta.push_back(d);
  }
  return TVertexCheck(tp, delta);
}

PiecewiseLinear<Rational> TildeG(std::span<const Rational> u,
                                 std::span<const Rational> v,
                                 const Rational& k, int horizon) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kPreconditionViolated, what);
  };
  if (horizon < 1) fail("horizon must be at least 1");
  if (static_cast<int>(u.size()) < horizon ||
      static_cast<int>(v.size()) < horizon) {
    fail("u and v need at least horizon entries");
  }
  if (!(v[0] > Rational(0))) fail("v_1 must be positive");
  for (int i = 0; i < horizon; ++i) {
    if (u[i] < Rational(0) || v[i] < Rational(0)) fail("u, v must be >= 0");
    if (!(u[i] + v[i] > Rational(0))) fail("u_i + v_i must be positive");
    if (i > 0 && (u[i] > u[i - 1] || v[i] > v[i - 1])) {
      fail("u and v must be non-increasing");
    }
  }
  if (k < Rational(0) || k * v[0] > Rational(1)) fail("k outside [0, 1/v_1]");

  const Rational offset = (Rational(1) - k * v[0]) / 2;
  std::vector<PiecewiseLinear<Rational>::Piece> pieces;
  Rational m(0);
  for (int h = 0; h < horizon; ++h) {
    const Rational flat_end = m + u[h];
    if (u[h] > Rational(0)) pieces.push_back({m, flat_end, Rational(h), Rational(0)});
    m = flat_end + v[h];
    if (v[h] > Rational(0)) {
      pieces.push_back({flat_end, m, Rational(h + 1) - offset, k});
    }
  }
  return PiecewiseLinear<Rational>(Rational(0), std::move(pieces));
}

std::optional<SuperadditivityViolation<Rational>> TildeGCheck(
    std::span<const Rational> u, std::span<const Rational> v,
    const Rational& k, int horizon) {
  return FindSuperadditivityViolation(TildeG(u, v, k, horizon));
}

namespace {

// Depth-first search over variables in decreasing objective order. All
// objective entries are made non-negative by complementing.
class ExactSearch {
 public:
  explicit ExactSearch(const IpInstance& inst) : n_(inst.n()) {
    std::vector<int64_t> c = inst.objective;
    flipped_.assign(n_, false);
    for (int j = 0; j < n_; ++j) {
      if (c[j] < 0) {
        flipped_[j] = true;
        constant_ += c[j];
        c[j] = -c[j];
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int i, int j) { return c[i] > c[j]; });
    for (int p = 0; p < n_; ++p) c_.push_back(c[order_[p]]);
    for (const LinearRow& r : inst.rows) {
      std::vector<int64_t> a(n_);
      int64_t rhs = r.rhs;
      for (int p = 0; p < n_; ++p) {
        int j = order_[p];
        a[p] = flipped_[j] ? -r.coefficients[j] : r.coefficients[j];
        if (flipped_[j]) rhs -= r.coefficients[j];
      }
      rows_.push_back(std::move(a));
      rhs_.push_back(rhs);
    }
    // Per row, positions with positive weight by decreasing c / a.
    for (const std::vector<int64_t>& a : rows_) {
      std::vector<int> ratio;
      for (int p = 0; p < n_; ++p) {
        if (a[p] > 0) ratio.push_back(p);
      }
      std::stable_sort(ratio.begin(), ratio.end(), [&](int p, int q) {
        return static_cast<__int128>(c_[p]) * a[q] >
               static_cast<__int128>(c_[q]) * a[p];
      });
      ratio_order_.push_back(std::move(ratio));
    }
  }

  std::optional<ExactOptimum> Run() {
    std::vector<__int128> used(rows_.size(), 0);
    // Lower limit of the remaining lhs, from negative coefficients.
    std::vector<__int128> neg_rest(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
      for (int64_t a : rows_[i]) {
        if (a < 0) neg_rest[i] += a;
      }
    }
    y_.assign(n_, 0);
    Dfs(0, 0, used, neg_rest);
    if (!found_) return std::nullopt;
    ExactOptimum out;
    out.value = best_ + constant_;
    out.x.assign(n_, 0);
    for (int p = 0; p < n_; ++p) {
      const int j = order_[p];
      out.x[j] = flipped_[j] ? 1 - best_y_[p] : best_y_[p];
    }
    return out;
  }

 private:
  // Fractional bound on what positions p.. can still add.
  double Bound(int p, const std::vector<__int128>& used) const {
    double bound = 0;
    for (int q = p; q < n_; ++q) bound += static_cast<double>(c_[q]);
    for (size_t i = 0; i < rows_.size(); ++i) {
      double room = static_cast<double>(rhs_[i] - used[i]);
      double row_bound = 0;
      for (int q = p; q < n_; ++q) {
        if (rows_[i][q] <= 0) {
          row_bound += static_cast<double>(c_[q]);
          room -= static_cast<double>(rows_[i][q]);
        }
      }
      for (int q : ratio_order_[i]) {
        if (q < p) continue;
        const double a = static_cast<double>(rows_[i][q]);
        if (a <= room) {
          room -= a;
          row_bound += static_cast<double>(c_[q]);
        } else {
          row_bound += static_cast<double>(c_[q]) * room / a;
          break;
        }
      }
      bound = std::min(bound, row_bound);
    }
    return bound;
  }

  void Dfs(int p, int64_t value, std::vector<__int128>& used,
           std::vector<__int128>& neg_rest) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (used[i] + neg_rest[i] > rhs_[i]) return;
    }
    if (p == n_) {
      if (!found_ || value > best_) {
        found_ = true;
        best_ = value;
        best_y_ = y_;
      }
      return;
    }
    if (found_ && static_cast<double>(value) + Bound(p, used) <
                      static_cast<double>(best_) + 1.0 - 1e-6) {
      return;
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][p] < 0) neg_rest[i] -= rows_[i][p];
    }
    for (int choice = 1; choice >= 0; --choice) {
      y_[p] = choice;
      if (choice) {
        for (size_t i = 0; i < rows_.size(); ++i) used[i] += rows_[i][p];
      }
      Dfs(p + 1, value + (choice ? c_[p] : 0), used, neg_rest);
      if (choice) {
        for (size_t i = 0; i < rows_.size(); ++i) used[i] -= rows_[i][p];
      }
    }
    y_[p] = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][p] < 0) neg_rest[i] += rows_[i][p];
    }
  }

  int n_;
  std::vector<bool> flipped_;
  int64_t constant_ = 0;
  std::vector<int> order_;
  std::vector<int64_t> c_;
  std::vector<std::vector<int64_t>> rows_;
  std::vector<int64_t> rhs_;
  std::vector<std::vector<int>> ratio_order_;
  std::vector<int> y_, best_y_;
  bool found_ = false;
  int64_t best_ = 0;
};

}  // namespace

std::optional<ExactOptimum> SolveExactly(const IpInstance& instance) {
  return ExactSearch(instance).Run();
}

std::optional<ExactOptimum> SolveByEnumeration(const IpInstance& instance) {
  const int n = instance.n();
  if (n > 24) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration limited to 24 variables, instance has " +
                    std::to_string(n));
  }
  std::optional<ExactOptimum> best;
  std::vector<int> x(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    for (int j = 0; j < n; ++j) x[j] = static_cast<int>((mask >> j) & 1);
    if (!instance.IsFeasible(x)) continue;
    const int64_t v = instance.Value(x);
    if (!best || v > best->value) best = ExactOptimum{v, x};
  }
  return best;
}

}  // namespace liftcover
