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

#include "liftcover/bench.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "liftcover/error.h"

namespace liftcover {
namespace {

[[noreturn]] void SpecFail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "bench spec line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> Words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

template <typename T>
T ParseNumber(const std::string& text, int line, const std::string& key) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    SpecFail(line, "bad value '" + text + "' for " + key);
  }
  return value;
}

std::map<std::string, std::string> KeyValues(
    const std::vector<std::string>& words, size_t first, int line) {
  std::map<std::string, std::string> out;
  for (size_t i = first; i < words.size(); ++i) {
    const size_t eq = words[i].find('=');
    if (eq == std::string::npos || eq == 0) {
      SpecFail(line, "expected key=value, found '" + words[i] + "'");
    }
    out[words[i].substr(0, eq)] = words[i].substr(eq + 1);
  }
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BenchSpec ParseBenchSpec(std::string_view text, const std::string& base_dir) {
  BenchSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::vector<std::string> words = Words(raw);
    if (words.empty()) continue;
    const std::string& directive = words[0];
    if (directive == "instance") {
      if (words.size() != 2) SpecFail(line, "usage: instance <path>");
      std::filesystem::path path(words[1]);
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      spec.instances.push_back(ReadInstance(path.string()));
    } else if (directive == "generate") {
      if (words.size() < 2) SpecFail(line, "usage: generate <kind> n=.. seed=..");
      auto kv = KeyValues(words, 2, line);
      auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) SpecFail(line, "missing " + key + "=");
        return it->second;
      };
      const int n = ParseNumber<int>(need("n"), line, "n");
      const uint64_t seed = ParseNumber<uint64_t>(need("seed"), line, "seed");
      const int count =
          kv.count("count") ? ParseNumber<int>(kv["count"], line, "count") : 1;
      for (const auto& [key, value] : kv) {
        if (key != "n" && key != "m" && key != "seed" && key != "count") {
          SpecFail(line, "unknown key " + key);
        }
      }
      for (int i = 0; i < count; ++i) {
        if (words[1] == "chvatal") {
          spec.instances.push_back(GenChvatal(n, seed + i));
        } else if (auto kind = ParseMkpKind(words[1])) {
          const int m = ParseNumber<int>(need("m"), line, "m");
          spec.instances.push_back(GenMkp(*kind, n, m, seed + i));
        } else {
          SpecFail(line, "unknown generator '" + words[1] + "'");
        }
      }
    } else if (directive == "config") {
      if (words.size() < 2) SpecFail(line, "usage: config <name> key=value...");
      BncConfig config;
      for (const auto& [key, value] : KeyValues(words, 2, line)) {
        if (key == "lift") {
          auto mode = ParseLiftingMode(value);
          if (!mode) SpecFail(line, "unknown lifting method '" + value + "'");
          config.lifting = *mode;
        } else if (key == "covers") {
          config.cover_methods.clear();
          std::istringstream list(value);
          std::string name;
          while (std::getline(list, name, '+')) {
            auto method = ParseCoverMethod(name);
            if (!method) SpecFail(line, "unknown cover routine '" + name + "'");
            config.cover_methods.push_back(*method);
          }
        } else if (key == "cut-limit") {
          config.per_node_cut_limit = ParseNumber<int>(value, line, key);
        } else if (key == "total-cut-limit") {
          config.total_cut_limit = ParseNumber<int64_t>(value, line, key);
        } else if (key == "time-limit") {
          config.time_limit = ParseNumber<double>(value, line, key);
        } else if (key == "node-limit") {
          config.node_limit = ParseNumber<int64_t>(value, line, key);
        } else if (key == "select") {
          if (value == "best-bound") {
            config.node_selection = NodeSelection::kBestBound;
          } else if (value == "dfs") {
            config.node_selection = NodeSelection::kDepthFirst;
          } else {
            SpecFail(line, "unknown node selection '" + value + "'");
          }
        } else {
          SpecFail(line, "unknown config key " + key);
        }
      }
      spec.configs.emplace_back(words[1], std::move(config));
    } else {
      SpecFail(line, "unknown directive '" + directive + "'");
    }
  }
  return spec;
}

BenchSpec ReadBenchSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseBenchSpec(buffer.str(),
                        std::filesystem::path(path).parent_path().string());
}

std::vector<BenchRecord> RunBench(const BenchSpec& spec, int jobs) {
  const size_t per_instance = spec.configs.size();
  const size_t total = spec.instances.size() * per_instance;
  std::vector<BenchRecord> records(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < total; k = next++) {
      const IpInstance& inst = spec.instances[k / per_instance];
      const auto& [name, config] = spec.configs[k % per_instance];
      try {
        const BncResult result = Solve(inst, config);
        BenchRecord& rec = records[k];
        rec.instance = inst.name;
        rec.seed = inst.seed;
        rec.config = name;
        rec.fingerprint = config.Fingerprint();
        rec.tree_size = result.stats.tree_size;
        rec.wall_time = result.stats.wall_time;
        rec.cuts_added = result.stats.cuts_added;
        rec.optimum = result.optimum;
        rec.proven_optimal = result.stats.proven_optimal;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::string BenchCsv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance,seed,config,fingerprint,tree_size,wall_time,cuts_added,"
         "optimum,proven_optimal\n";
  for (const BenchRecord& r : records) {
    out << CsvField(r.instance) << ',';
    if (r.seed) out << *r.seed;
    out << ',' << CsvField(r.config) << ',' << CsvField(r.fingerprint) << ','
        << r.tree_size << ',' << r.wall_time << ',' << r.cuts_added << ',';
    if (r.optimum) out << *r.optimum;
    out << ',' << (r.proven_optimal ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<int64_t> ProfileThresholds() {
  std::vector<int64_t> out;
  for (int64_t decade = 1; decade <= 1'000'000; decade *= 10) {
    for (int64_t step : {1, 2, 5}) out.push_back(decade * step);
  }
  out.push_back(10'000'000);
  return out;
}

std::string ProfileCsv(const std::vector<BenchRecord>& records) {
  std::vector<std::string> configs;
  for (const BenchRecord& r : records) {
    if (std::find(configs.begin(), configs.end(), r.config) == configs.end()) {
      configs.push_back(r.config);
    }
  }
  std::ostringstream out;
  out << "method,threshold,instances_solved\n";
  for (const std::string& config : configs) {
    for (int64_t threshold : ProfileThresholds()) {
      int solved = 0;
      for (const BenchRecord& r : records) {
        if (r.config == config && r.proven_optimal && r.tree_size <= threshold) {
          ++solved;
        }
      }
      out << CsvField(config) << ',' << threshold << ',' << solved << '\n';
    }
  }
  return out.str();
}

}  // namespace liftcover
