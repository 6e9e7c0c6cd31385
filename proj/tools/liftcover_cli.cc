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

// liftcover command-line tool. Exit codes: 0 success, 1 error, 2 usage,
// 3 search stopped before optimality was proven, 4 oracle budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftcover/liftcover.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotProven = 3;
constexpr int kExitBudget = 4;

struct InstanceDeleter {
  void operator()(lc_instance* p) const { lc_instance_free(p); }
};
using InstancePtr = std::unique_ptr<lc_instance, InstanceDeleter>;

// Carries an lc_status out of a command.
struct Failure {
  lc_status status;
};

void Check(lc_status status) {
  if (status != LC_OK) throw Failure{status};
}

InstancePtr Load(const std::string& path) {
  lc_instance* inst = nullptr;
  Check(lc_instance_read(path.c_str(), &inst));
  return InstancePtr(inst);
}

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  lc_string_free(s);
  return out;
}

std::string SetString(const std::vector<int>& items) {
  std::string out = "{";
  for (size_t i = 0; i < items.size(); ++i) {
    out += (i ? "," : "") + std::to_string(items[i]);
  }
  return out + "}";
}

template <typename T>
std::string Tuple(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::vector<int> ZeroBased(const std::vector<int>& one_based) {
  std::vector<int> out;
  for (int v : one_based) out.push_back(v - 1);
  return out;
}

std::vector<double> ReadPoint(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw Failure{LC_IO_ERROR};
  }
  std::vector<double> x;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream words(line);
    double v;
    while (words >> v) x.push_back(v);
    if (!words.eof()) {
      std::cerr << "error: " << path << ": non-numeric LP value\n";
      throw Failure{LC_PARSE_ERROR};
    }
  }
  if (static_cast<int>(x.size()) != n) {
    std::cerr << "error: " << path << " holds " << x.size()
              << " values, the instance has " << n << " variables\n";
    throw Failure{LC_DIMENSION_MISMATCH};
  }
  return x;
}

std::string ValidateLiftMethod(const std::string& s) {
  if (s == "pc" || s == "gns" || s == "smart" || s.rfind("k=", 0) == 0) {
    return "";
  }
  return "expected pc, gns, smart or k=<rational>, got '" + s + "'";
}

int RunCovers(const std::string& file, int row, const std::string& lp,
              const std::string& method) {
  InstancePtr inst = Load(file);
  const int n = lc_instance_num_vars(inst.get());
  std::vector<double> x(n);
  if (lp == "solve-root") {
    Check(lc_root_lp(inst.get(), x.data(), nullptr));
  } else {
    x = ReadPoint(lp, n);
  }
  lc_cover_list* raw = nullptr;
  Check(lc_generate_covers(inst.get(), row - 1, x.data(), method.c_str(), &raw));
  std::unique_ptr<lc_cover_list, void (*)(lc_cover_list*)> list(
      raw, lc_cover_list_free);
  for (int i = 0; i < lc_cover_list_count(list.get()); ++i) {
    std::vector<int> cover, display;
    for (int k = 0; k < lc_cover_list_size(list.get(), i); ++k) {
      cover.push_back(lc_cover_list_item(list.get(), i, k));
      display.push_back(cover.back() + 1);
    }
    const int t = static_cast<int>(cover.size());
    std::vector<int64_t> mu(t + 1), rho(t);
    int64_t lambda = 0;
    Check(lc_cover_params(inst.get(), row - 1, cover.data(), t, mu.data(),
                          &lambda, rho.data()));
    std::vector<int64_t> mu_tail(mu.begin() + 1, mu.end());
    std::cout << lc_cover_list_method(list.get(), i) << ": "
              << SetString(display) << "  mu=" << Tuple(mu_tail)
              << " lambda=" << lambda << " rho=" << Tuple(rho) << "\n";
  }
  return 0;
}

int RunLift(const std::string& file, int row, const std::vector<int>& cover,
            const std::string& method) {
  InstancePtr inst = Load(file);
  const std::vector<int> items = ZeroBased(cover);
  lc_cut_list* raw = nullptr;
  Check(lc_lift(inst.get(), row - 1, items.data(),
                static_cast<int>(items.size()), method.c_str(), &raw));
  std::unique_ptr<lc_cut_list, void (*)(lc_cut_list*)> list(raw,
                                                             lc_cut_list_free);
  for (int i = 0; i < lc_cut_list_count(list.get()); ++i) {
    char* text = nullptr;
    Check(lc_cut_format(list.get(), i, &text));
    std::cout << lc_cut_method(list.get(), i) << " cut: " << TakeString(text)
              << "\n";
    Check(lc_cut_format_lifted(list.get(), i, &text));
    std::cout << "lifted: " << TakeString(text) << "\n";
  }
  return 0;
}

struct CheckArgs {
  std::string file;
  int row = 1;
  std::vector<int> cover;
  std::string what;
  std::string method = "gns";
  std::string raw_cut;
  std::string rhs;
  double logistic = 0;
};

int RunCheck(const CheckArgs& a) {
  InstancePtr inst = Load(a.file);
  const std::vector<int> items = ZeroBased(a.cover);
  lc_check_options options;
  lc_check_options_init(&options);
  options.method = a.method.c_str();
  if (!a.raw_cut.empty()) {
    options.raw_cut = a.raw_cut.c_str();
    options.raw_rhs = a.rhs.c_str();
  }
  options.logistic_steepness = a.logistic;
  lc_check_result* raw = nullptr;
  Check(lc_check(inst.get(), a.row - 1, items.data(),
                 static_cast<int>(items.size()), a.what.c_str(), &options,
                 &raw));
  std::cout << lc_check_result_text(raw) << "\n";
  lc_check_result_free(raw);
  return 0;
}

struct SolveArgs {
  std::string file;
  std::string lift = "pc";
  std::string covers = "contiguous";
  std::string select = "best-bound";
  int cut_limit = 10;
  int64_t total_cut_limit = -1;
  int64_t node_limit = -1;
  double time_limit = 0;
  uint64_t seed = 0;
  std::string json;
};

int RunSolve(const SolveArgs& a) {
  InstancePtr inst = Load(a.file);
  lc_solve_config config;
  lc_solve_config_init(&config);
  config.lifting = a.lift.c_str();
  config.covers = a.covers.c_str();
  config.node_selection = a.select.c_str();
  config.per_node_cut_limit = a.cut_limit;
  config.total_cut_limit = a.total_cut_limit;
  config.node_limit = a.node_limit;
  config.time_limit = a.time_limit;
  config.seed = a.seed;
  lc_solve_result* raw = nullptr;
  Check(lc_solve(inst.get(), &config, &raw));
  std::unique_ptr<lc_solve_result, void (*)(lc_solve_result*)> r(
      raw, lc_solve_result_free);
  const int n = lc_instance_num_vars(inst.get());
  const bool has = lc_solve_result_has_incumbent(r.get());
  std::vector<int> x(n, 0);
  lc_solve_result_point(r.get(), x.data());

  if (a.json != "-") {
    std::cout << "status: " << lc_solve_result_status(r.get()) << "\n";
    if (has) {
      std::cout << "objective: " << lc_solve_result_objective(r.get()) << "\n";
      std::vector<int> chosen;
      for (int j = 0; j < n; ++j) {
        if (x[j]) chosen.push_back(j + 1);
      }
      std::cout << "selected: " << SetString(chosen) << "\n";
    } else {
      std::cout << "objective: none\n";
    }
    std::cout << "tree size: " << lc_solve_result_tree_size(r.get()) << "\n"
              << "cuts added: " << lc_solve_result_cuts_added(r.get()) << " of "
              << lc_solve_result_cuts_generated(r.get()) << " separating\n"
              << "wall time: " << lc_solve_result_wall_time(r.get()) << " s\n";
  }

  if (!a.json.empty()) {
    nlohmann::json j;
    j["instance"] = lc_instance_name(inst.get());
    j["config"] = lc_solve_result_fingerprint(r.get());
    j["seed"] = a.seed;
    j["status"] = lc_solve_result_status(r.get());
    j["objective"] = has ? nlohmann::json(lc_solve_result_objective(r.get()))
                         : nlohmann::json(nullptr);
    j["x"] = has ? nlohmann::json(x) : nlohmann::json(nullptr);
    j["proven_optimal"] = lc_solve_result_proven_optimal(r.get()) != 0;
    j["tree_size"] = lc_solve_result_tree_size(r.get());
    j["cuts_generated"] = lc_solve_result_cuts_generated(r.get());
    j["cuts_added"] = lc_solve_result_cuts_added(r.get());
    j["lp_iterations"] = lc_solve_result_lp_iterations(r.get());
    j["wall_time"] = lc_solve_result_wall_time(r.get());
    if (a.json == "-") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ofstream out(a.json);
      out << j.dump(2) << "\n";
      if (!out) {
        std::cerr << "error: cannot write " << a.json << "\n";
        return kExitError;
      }
    }
  }
  return lc_solve_result_proven_optimal(r.get()) ? 0 : kExitNotProven;
}

int RunBench(const std::string& spec, const std::string& out,
             std::string profile_out, int jobs) {
  if (profile_out.empty()) {
    const size_t dot = out.rfind('.');
    profile_out = dot == std::string::npos || out.find('/', dot) != std::string::npos
                      ? out + "_profile"
                      : out.substr(0, dot) + "_profile" + out.substr(dot);
  }
  char* csv = nullptr;
  char* profile = nullptr;
  Check(lc_bench_run(spec.c_str(), jobs, &csv, &profile));
  const std::string records = TakeString(csv);
  const std::string curves = TakeString(profile);
  for (const auto& [path, body] : {std::pair{out, records},
                                   std::pair{profile_out, curves}}) {
    std::ofstream file(path);
    file << body;
    if (!file) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitError;
    }
  }
  std::cout << "wrote " << out << " and " << profile_out << "\n";
  return 0;
}

int RunGen(const std::string& kind, int n, int m, uint64_t seed,
           const std::string& out) {
  lc_instance* raw = nullptr;
  Check(lc_instance_generate(kind.c_str(), n, m, seed, &raw));
  InstancePtr inst(raw);
  if (out.empty() || out == "-") {
    char* text = nullptr;
    Check(lc_instance_format(inst.get(), &text));
    std::cout << TakeString(text);
  } else {
    Check(lc_instance_write(inst.get(), out.c_str()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifted cover cuts for 0-1 knapsack rows"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lc_version());

  std::string file;
  int row = 1;
  std::vector<int> cover;

  auto* covers = app.add_subcommand("covers", "list covers for an LP point");
  std::string lp = "solve-root", cover_method = "all";
  covers->add_option("instance", file, "instance file")->required();
  covers->add_option("--row", row, "1-based row index")->check(CLI::PositiveNumber);
  covers->add_option("--lp", lp, "point file or 'solve-root'");
  covers->add_option("--method", cover_method, "cover routine")
      ->check(CLI::IsMember({"contiguous", "spread", "heaviest", "default",
                             "bang-for-buck", "all"}));

  auto* lift = app.add_subcommand("lift", "lift a minimal cover inequality");
  std::string lift_method = "smart";
  lift->add_option("instance", file, "instance file")->required();
  lift->add_option("--row", row, "1-based row index")->check(CLI::PositiveNumber);
  lift->add_option("--cover", cover, "1-based variables, comma separated")
      ->required()
      ->delimiter(',');
  lift->add_option("--method", lift_method, "pc, gns, smart or k=<rational>")
      ->check(ValidateLiftMethod);

  auto* check = app.add_subcommand("check", "verify a property with oracles");
  CheckArgs ca;
  check->add_option("instance", ca.file, "instance file")->required();
  check->add_option("--row", ca.row, "1-based row index")->check(CLI::PositiveNumber);
  check->add_option("--cover", ca.cover, "1-based variables, comma separated")
      ->delimiter(',');
  check->add_option("--what", ca.what, "property to check")
      ->required()
      ->check(CLI::IsMember(
          {"superadd", "facet-pc", "facet-gns", "domination", "validity"}));
  check->add_option("--method", ca.method, "pc, gns or k=<rational>")
      ->check(ValidateLiftMethod);
  check->add_option("--raw-cut", ca.raw_cut,
                    "explicit cut coefficients for --what validity");
  check->add_option("--rhs", ca.rhs, "right-hand side of --raw-cut");
  check->add_option("--logistic", ca.logistic,
                    "use a logistic w with this steepness")
      ->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "branch and cut");
  SolveArgs sa;
  solve->add_option("instance", sa.file, "instance file")->required();
  solve->add_option("--lift", sa.lift, "lifting method")
      ->check(CLI::IsMember({"none", "pc", "gns", "smart"}));
  solve->add_option("--covers", sa.covers,
                    "cover routines joined by ',' or '+', or 'all'");
  solve->add_option("--select", sa.select, "node selection")
      ->check(CLI::IsMember({"best-bound", "dfs"}));
  solve->add_option("--cut-limit", sa.cut_limit, "cuts added per node")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--total-cut-limit", sa.total_cut_limit, "cuts overall")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--node-limit", sa.node_limit, "maximum tree size")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--time-limit", sa.time_limit, "seconds")
      ->check(CLI::PositiveNumber);
  solve->add_option("--seed", sa.seed, "recorded with the result");
  solve->add_option("--json", sa.json, "write stats as JSON ('-' for stdout)");

  auto* bench = app.add_subcommand("bench", "run a benchmark spec");
  std::string spec, out, profile_out;
  int jobs = 1;
  bench->add_option("spec", spec, "bench spec file")->required();
  bench->add_option("--out", out, "record CSV")->required();
  bench->add_option("--profile-out", profile_out, "performance profile CSV");
  bench->add_option("--jobs", jobs, "parallel solves")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string kind;
  int gn = 0, gm = 1;
  uint64_t gseed = 0;
  std::string gout;
  gen->add_option("kind", kind, "generator")
      ->required()
      ->check(CLI::IsMember({"uncorrelated", "weakly-correlated", "chvatal"}));
  gen->add_option("--n", gn, "variables")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", gm, "rows")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gseed, "random seed");
  gen->add_option("--out", gout, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*covers) return RunCovers(file, row, lp, cover_method);
    if (*lift) return RunLift(file, row, cover, lift_method);
    if (*check) return RunCheck(ca);
    if (*solve) return RunSolve(sa);
    if (*bench) return RunBench(spec, out, profile_out, jobs);
    if (*gen) return RunGen(kind, gn, gm, gseed, gout);
  } catch (const Failure& f) {
    const char* msg = lc_last_error();
    if (msg[0] != '\0') {
      std::cerr << "error: " << lc_status_name(f.status) << ": " << msg << "\n";
    }
    if (f.status == LC_BUDGET_EXCEEDED) return kExitBudget;
    return kExitError;
  }
  return kExitUsage;
}
