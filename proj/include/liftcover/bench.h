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

#ifndef LIFTCOVER_BENCH_H_
#define LIFTCOVER_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftcover/branch_and_cut.h"
#include "liftcover/instances.h"

namespace liftcover {

// Benchmark description, one directive per line:
//   instance <path>
//   generate <uncorrelated|weakly-correlated|chvatal> n=<n> [m=<m>]
//            seed=<s> [count=<c>]
//   config <name> [lift=..] [covers=a+b] [cut-limit=..] [total-cut-limit=..]
//          [time-limit=..] [node-limit=..] [select=best-bound|dfs]
// Relative instance paths are resolved against base_dir.
struct BenchSpec {
  std::vector<IpInstance> instances;
  std::vector<std::pair<std::string, BncConfig>> configs;
};

BenchSpec ParseBenchSpec(std::string_view text, const std::string& base_dir);
BenchSpec ReadBenchSpec(const std::string& path);

struct BenchRecord {
  std::string instance;
  std::optional<uint64_t> seed;
  std::string config;
  std::string fingerprint;
  int64_t tree_size = 0;
  double wall_time = 0;
  int64_t cuts_added = 0;
  std::optional<int64_t> optimum;
  bool proven_optimal = false;
};

// Solves every (instance, config) pair on up to  threads. Records are
// ordered by instance, then config, as listed in the spec.
std::vector<BenchRecord> RunBench(const BenchSpec& spec, int jobs);

std::string BenchCsv(const std::vector<BenchRecord>& records);

// Tree-size thresholds 1, 2, 5, 10, ..., 5e6, 1e7.
std::vector<int64_t> ProfileThresholds();

// For each config and threshold, the number of instances proven optimal
// with a tree no larger than the threshold.
std::string ProfileCsv(const std::vector<BenchRecord>& records);

}  // namespace liftcover

#endif  // LIFTCOVER_BENCH_H_
