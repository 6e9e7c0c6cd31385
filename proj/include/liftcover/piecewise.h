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

#ifndef LIFTCOVER_PIECEWISE_H_
#define LIFTCOVER_PIECEWISE_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liftcover/error.h"
#include "liftcover/knapsack.h"
#include "liftcover/lifting.h"
#include "liftcover/rational.h"

namespace liftcover {

// Piecewise-linear function on [0, end] made of left-open, right-closed
// pieces (lo, hi], plus an explicit value at 0. Works with exact rationals
// or doubles.
template <typename T>
class PiecewiseLinear {
 public:
  struct Piece {
    T lo;
    T hi;
    T value_at_hi;
    T slope;
  };

  PiecewiseLinear(T value_at_zero, std::vector<Piece> pieces);

  const T& end() const { return x_.back(); }
  // Breakpoints x_0 = 0 < x_1 < ... < x_K = end.
  const std::vector<T>& breakpoints() const { return x_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const T& value_at_break(size_t i) const { return value_[i]; }
  // lim_{y -> x_i+} g(y); equals the value for i = K.
  const T& right_limit_at_break(size_t i) const { return right_[i]; }
  bool jumps_at_break(size_t i) const { return !(right_[i] == value_[i]); }

  T operator()(const T& z) const;

  // Evaluates a non-decreasing sequence of points in amortised O(1).
  class Cursor {
   public:
    explicit Cursor(const PiecewiseLinear& g) : g_(&g) {}
    struct Sample {
      T value;
      T right_limit;
    };
    Sample At(const T& z);
    void Reset() { piece_ = 0; }

   private:
    const PiecewiseLinear* g_;
    size_t piece_ = 0;
  };

 private:
  std::vector<Piece> pieces_;
  std::vector<T> x_;
  std::vector<T> value_;
  std::vector<T> right_;
};

template <typename T>
struct SuperadditivityViolation {
  // A point with g(z1) + g(z2) - g(z1 + z2) = violation.
  T z1;
  T z2;
  T violation;
  // Arrangement vertex next to the witness and the one-sided limit of the
  // violation there (the supremum over the adjacent cell).
  T vertex_z1;
  T vertex_z2;
  T limit_violation;
};

template <typename T>
struct SuperadditivityOptions {
  // Violations at or below this value are ignored.
  T tolerance{};
  // Restrict both arguments to [lo, hi].
  std::optional<std::pair<T, T>> window;
};

// Exact search for the largest violation of g(z1 + z2) >= g(z1) + g(z2) over
// z1, z2 >= 0, z1 + z2 <= end. On each cell of the arrangement cut out by
// z1 = p, z2 = p, z1 + z2 = p (p a breakpoint) the violation is affine, so
// its supremum is a one-sided limit at a cell vertex; every vertex is probed
// from every adjacent cell. Returns nullopt when g is superadditive.
template <typename T>
std::optional<SuperadditivityViolation<T>> FindSuperadditivityViolation(
    const PiecewiseLinear<T>& g, const SuperadditivityOptions<T>& options = {});

// g_k for a cover as an exact piecewise-linear function on [0, b].
PiecewiseLinear<Rational> GkPiecewise(const CoverParams& params,
                                      const LiftParam& param);

// g_w for a tabulated w; the knots of w become breakpoints on every sloped
// interval.
PiecewiseLinear<double> GwPiecewise(const CoverParams& params,
                                    const TabulatedFunction& w);

// ----------------------------------------------------------------------------
// Implementation.

template <typename T>
PiecewiseLinear<T>::PiecewiseLinear(T value_at_zero, std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "piecewise function has no pieces");
  }
  if (!(pieces_.front().lo == T(0))) {
    throw Error(ErrorCode::kInvalidArgument,
                "piecewise function must start at 0");
  }
  x_.push_back(T(0));
  value_.push_back(value_at_zero);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!(p.lo < p.hi) || !(p.lo == x_.back())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pieces must be non-empty and contiguous");
    }
    right_.push_back(p.value_at_hi - p.slope * (p.hi - p.lo));
    x_.push_back(p.hi);
    value_.push_back(p.value_at_hi);
  }
  right_.push_back(value_.back());
}

template <typename T>
T PiecewiseLinear<T>::operator()(const T& z) const {
  if (z < T(0) || z > end()) {
    throw Error(ErrorCode::kInvalidArgument, "argument outside [0, end]");
  }
  if (z == T(0)) return value_.front();
  auto it = std::lower_bound(x_.begin() + 1, x_.end(), z);
  const Piece& p = pieces_[static_cast<size_t>(it - x_.begin()) - 1];
  return p.value_at_hi - p.slope * (p.hi - z);
}

template <typename T>
typename PiecewiseLinear<T>::Cursor::Sample
PiecewiseLinear<T>::Cursor::At(const T& z) {
  const auto& x = g_->x_;
  if (z == T(0)) return {g_->value_.front(), g_->right_.front()};
  while (piece_ + 1 < g_->pieces_.size() && z > x[piece_ + 1]) ++piece_;
  const Piece& p = g_->pieces_[piece_];
  const T value = p.value_at_hi - p.slope * (p.hi - z);
  if (z == p.hi) return {value, g_->right_[piece_ + 1]};
  return {value, value};
}

namespace internal {

template <typename T>
struct VertexProbe {
  T value;      // g at the vertex coordinate
  T right;      // right limit there
};

// Largest one-sided limit of g(z1)+g(z2)-g(s) at a vertex, with the sign
// pattern (d1, d2, d3) of the approach direction that attains it.
template <typename T>
T BestLimit(const VertexProbe<T>& p1, const VertexProbe<T>& p2,
            const VertexProbe<T>& ps, bool can_dec1, bool can_inc1,
            bool can_dec2, bool can_inc2, bool can_inc_sum,
            std::array<int, 3>* pattern) {
  const bool jumps = !(p1.right == p1.value) || !(p2.right == p2.value) ||
                     !(ps.right == ps.value);
  T best = p1.value + p2.value - ps.value;
  *pattern = {0, 0, 0};
  if (!jumps) return best;
  for (int d1 = -1; d1 <= 1; ++d1) {
    if ((d1 < 0 && !can_dec1) || (d1 > 0 && !can_inc1)) continue;
    for (int d2 = -1; d2 <= 1; ++d2) {
      if ((d2 < 0 && !can_dec2) || (d2 > 0 && !can_inc2)) continue;
      if (d1 == 0 && d2 == 0) continue;
      int lo = d1 + d2 > 0 ? 1 : (d1 + d2 < 0 ? -1 : 0);
      int hi = lo;
      if (d1 * d2 < 0) {
        lo = -1;
        hi = 1;
      }
      for (int d3 = lo; d3 <= hi; ++d3) {
        if (d3 > 0 && !can_inc_sum) continue;
        T v = (d1 > 0 ? p1.right : p1.value) + (d2 > 0 ? p2.right : p2.value) -
              (d3 > 0 ? ps.right : ps.value);
        if (v > best) {
          best = v;
          *pattern = {d1, d2, d3};
        }
      }
    }
  }
  return best;
}

// Direction realising a sign pattern (d1, d2, sign of d1 + d2).
inline std::pair<int, int> DirectionFor(const std::array<int, 3>& pattern) {
  int d1 = pattern[0], d2 = pattern[1];
  if (d1 * d2 < 0) {
    // Opposite signs: pick magnitudes so that d1 + d2 has the wanted sign.
    if (pattern[2] == 0) return {d1, d2};
    const bool first_dominates = (pattern[2] > 0) == (d1 > 0);
    return first_dominates ? std::pair{2 * d1, d2} : std::pair{d1, 2 * d2};
  }
  return {d1, d2};
}

}  // namespace internal

template <typename T>
std::optional<SuperadditivityViolation<T>> FindSuperadditivityViolation(
    const PiecewiseLinear<T>& g, const SuperadditivityOptions<T>& options) {
  const std::vector<T>& xs = g.breakpoints();
  const T end = g.end();
  T lo = T(0), hi = end;
  if (options.window) {
    lo = std::max(lo, options.window->first);
    hi = std::min(hi, options.window->second);
    if (hi < lo) return std::nullopt;
  }

  // Candidate coordinates for z1/z2: breakpoints inside the window plus the
  // window edges.
  std::vector<T> coords;
  coords.push_back(lo);
  for (const T& x : xs) {
    if (x > lo && x < hi) coords.push_back(x);
  }
  if (hi > lo) coords.push_back(hi);

  std::vector<internal::VertexProbe<T>> probes;
  probes.reserve(coords.size());
  {
    typename PiecewiseLinear<T>::Cursor cursor(g);
    for (const T& z : coords) {
      auto s = cursor.At(z);
      probes.push_back({s.value, s.right_limit});
    }
  }

  bool found = false;
  T best{};
  T best_z1{}, best_z2{};
  std::array<int, 3> best_pattern{0, 0, 0};

  auto consider = [&](const T& z1, const T& z2,
                      const internal::VertexProbe<T>& p1,
                      const internal::VertexProbe<T>& p2,
                      const internal::VertexProbe<T>& ps) {
    const T sum = z1 + z2;
    std::array<int, 3> pattern;
    T v = internal::BestLimit(p1, p2, ps, z1 > lo, z1 < hi, z2 > lo, z2 < hi,
                              sum < end, &pattern);
    if (v > options.tolerance && (!found || v > best)) {
      found = true;
      best = v;
      best_z1 = z1;
      best_z2 = z2;
      best_pattern = pattern;
    }
  };

  // Vertices with z1 and z2 both on candidate lines. Symmetric in (z1, z2),
  // so z1 <= z2 suffices.
  typename PiecewiseLinear<T>::Cursor sum_cursor(g);
  for (size_t i = 0; i < coords.size(); ++i) {
    sum_cursor.Reset();
    for (size_t j = i; j < coords.size(); ++j) {
      const T sum = coords[i] + coords[j];
      if (sum > end) break;
      auto s = sum_cursor.At(sum);
      consider(coords[i], coords[j], probes[i], probes[j],
               {s.value, s.right_limit});
    }
  }

  // Vertices with z1 on a candidate line and z1 + z2 on a breakpoint; the
  // mirrored family is covered by symmetry.
  typename PiecewiseLinear<T>::Cursor z2_cursor(g);
  for (size_t i = 0; i < coords.size(); ++i) {
    const T& z1 = coords[i];
    z2_cursor.Reset();
    auto first = std::lower_bound(xs.begin(), xs.end(), z1 + lo);
    for (size_t k = static_cast<size_t>(first - xs.begin()); k < xs.size();
         ++k) {
      const T z2 = xs[k] - z1;
      if (z2 > hi) break;
      if (z2 < lo) continue;
      auto s2 = z2_cursor.At(z2);
      consider(z1, z2, probes[i], {s2.value, s2.right_limit},
               {g.value_at_break(k), g.right_limit_at_break(k)});
    }
  }

  if (!found) return std::nullopt;

  SuperadditivityViolation<T> result;
  result.vertex_z1 = best_z1;
  result.vertex_z2 = best_z2;
  result.limit_violation = best;
  auto violation_at = [&](const T& a, const T& b) { return g(a) + g(b) - g(a + b); };
  if (best_pattern == std::array<int, 3>{0, 0, 0}) {
    result.z1 = best_z1;
    result.z2 = best_z2;
    result.violation = violation_at(best_z1, best_z2);
    return result;
  }
  // Walk into the cell until the affine violation there is positive.
  auto [d1, d2] = internal::DirectionFor(best_pattern);
  T min_gap = end;
  for (size_t i = 1; i < xs.size(); ++i) min_gap = std::min(min_gap, xs[i] - xs[i - 1]);
  T step = min_gap / T(8);
  result.z1 = best_z1;
  result.z2 = best_z2;
  result.violation = violation_at(best_z1, best_z2);
  for (int iter = 0; iter < 40; ++iter) {
    const T a = best_z1 + T(d1) * step;
    const T b = best_z2 + T(d2) * step;
    if (!(a < T(0)) && !(b < T(0)) && !(a + b > end) && !(a < lo) &&
        !(a > hi) && !(b < lo) && !(b > hi)) {
      const T v = violation_at(a, b);
      if (v > options.tolerance) {
        result.z1 = a;
        result.z2 = b;
        result.violation = v;
        break;
      }
    }
    step = step / T(2);
  }
  return result;
}

}  // namespace liftcover

#endif  // LIFTCOVER_PIECEWISE_H_
