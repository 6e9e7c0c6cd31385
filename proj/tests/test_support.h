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

#ifndef LIFTCOVER_TESTS_TEST_SUPPORT_H_
#define LIFTCOVER_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "liftcover/knapsack.h"
#include "liftcover/rational.h"

namespace liftcover::testing {

inline std::string DataPath(const std::string& name) {
#ifdef LIFTCOVER_TEST_DATA
  return std::string(LIFTCOVER_TEST_DATA) + "/" + name;
#else
  return "tests/data/" + name;
#endif
}

// 1-based item labels to 0-based indices.
inline std::vector<int> Items(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int j : one_based) out.push_back(j - 1);
  return out;
}

inline std::vector<Rational> Rationals(std::initializer_list<Rational> list) {
  return std::vector<Rational>(list);
}

struct RandomCover {
  KnapsackRow row{{1}, 1};
  std::vector<int> cover;
};

// A row with a minimal cover of t items followed by up to extra items
// outside it, shuffled. Cover weights are drawn from [1, max_weight].
inline RandomCover MakeRandomCover(std::mt19937_64& rng, int t, int extra,
                                   int64_t max_weight) {
  std::uniform_int_distribution<int64_t> weight(1, max_weight);
  std::vector<int64_t> a(t);
  for (auto& w : a) w = weight(rng);
  const int64_t total = std::accumulate(a.begin(), a.end(), int64_t{0});
  const int64_t lightest = *std::min_element(a.begin(), a.end());
  std::uniform_int_distribution<int64_t> cap(total - lightest, total - 1);
  const int64_t b = cap(rng);
  std::uniform_int_distribution<int64_t> other(1, b);
  for (int i = 0; i < extra; ++i) a.push_back(other(rng));
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int64_t> weights(a.size());
  std::vector<int> cover;
  for (size_t i = 0; i < a.size(); ++i) {
    weights[perm[i]] = a[i];
    if (static_cast<int>(i) < t) cover.push_back(perm[i]);
  }
  std::sort(cover.begin(), cover.end());
  return {KnapsackRow(weights, b), cover};
}

// Same, restricted to covers with mu_1 - lambda >= rho_1.
inline RandomCover MakeAdmissibleCover(std::mt19937_64& rng, int t, int extra,
                                       int64_t max_weight) {
  for (;;) {
    RandomCover rc = MakeRandomCover(rng, t, extra, max_weight);
    if (CoverParams::Create(rc.row, rc.cover).AdmitsAllSlopes()) return rc;
  }
}

// A random slope in [0, 1/rho_1] with denominator up to 12 rho_1.
inline Rational RandomSlope(std::mt19937_64& rng, const CoverParams& params) {
  const int64_t rho1 = params.rho1();
  if (rho1 == 0) return Rational(std::uniform_int_distribution<int>(0, 3)(rng));
  const int64_t den = 12 * rho1;
  return Rational(std::uniform_int_distribution<int64_t>(0, 12)(rng), den);
}

}  // namespace liftcover::testing

#endif  // LIFTCOVER_TESTS_TEST_SUPPORT_H_
