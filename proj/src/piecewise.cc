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

namespace liftcover {

template class PiecewiseLinear<Rational>;
template class PiecewiseLinear<double>;
template std::optional<SuperadditivityViolation<Rational>>
FindSuperadditivityViolation(const PiecewiseLinear<Rational>&,
                             const SuperadditivityOptions<Rational>&);
template std::optional<SuperadditivityViolation<double>>
FindSuperadditivityViolation(const PiecewiseLinear<double>&,
                             const SuperadditivityOptions<double>&);

PiecewiseLinear<Rational> GkPiecewise(const CoverParams& params,
                                      const LiftParam& param) {
  // Evaluating once validates the slope and the superadditivity hypothesis.
  EvalGk(params, param, Rational(0));
  const Rational k = param.SlopeFor(params);
  const Rational offset = (Rational(1) - k * params.rho1()) / 2;
  const int64_t lambda = params.lambda();
  std::vector<PiecewiseLinear<Rational>::Piece> pieces;
  for (int h = 0; h < params.t(); ++h) {
    const int64_t left = params.mu(h) - lambda;
    const int64_t mid = left + params.rho(h);
    if (h >= 1 && params.rho(h) > 0) {
      pieces.push_back({left, mid, Rational(h) - offset, k});
    }
    const int64_t right = params.mu(h + 1) - lambda;
    if (std::max<int64_t>(mid, 0) < right) {
      pieces.push_back({std::max<int64_t>(mid, 0), right, h, 0});
    }
  }
  return PiecewiseLinear<Rational>(0, std::move(pieces));
}

PiecewiseLinear<double> GwPiecewise(const CoverParams& params,
                                    const TabulatedFunction& w) {
  const double lambda = static_cast<double>(params.lambda());
  std::vector<PiecewiseLinear<double>::Piece> pieces;
  auto add = [&](double lo, double hi, double value_lo_plus, double value_hi) {
    if (!(hi > lo)) return;
    pieces.push_back({lo, hi, value_hi, (value_hi - value_lo_plus) / (hi - lo)});
  };
  for (int h = 0; h < params.t(); ++h) {
    const double left = params.mu(h) - lambda;
    const double rho = static_cast<double>(params.rho(h));
    const double mid = left + rho;
    if (h >= 1 && params.rho(h) > 0) {
      // Knots of w strictly inside [0, rho_h) map to breakpoints R - x_i.
      std::vector<double> zs;
      for (int i = w.intervals(); i >= 0; --i) {
        const double x = w.knot(i);
        if (x < rho && x >= 0.0) zs.push_back(mid - x);
      }
      double prev = left;
      for (double z : zs) {
        if (z <= prev) continue;
        add(prev, z, h - w(mid - prev), h - w(mid - z));
        prev = z;
      }
    }
    const double right = params.mu(h + 1) - lambda;
    const double flat_lo = std::max(mid, 0.0);
    add(flat_lo, right, h, h);
  }
  return PiecewiseLinear<double>(0.0, std::move(pieces));
}

}  // namespace liftcover
