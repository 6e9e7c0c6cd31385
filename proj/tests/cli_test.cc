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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun Cli(const std::string& args) {
  const std::string command = std::string(LIFTCOVER_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string Data(const std::string& name) {
  return std::string(LIFTCOVER_TEST_DATA) + "/" + name;
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliTest, CoversOnWorkedNode) {
  CliRun r = Cli("covers " + Data("node_example.txt") + " --lp " +
              Data("node_example.lp") + " --method all");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "contiguous: {1,2,3}")) << r.output;
  EXPECT_TRUE(Contains(r.output, "contiguous: {3,4,6,7,8}"));
  EXPECT_TRUE(Contains(r.output, "spread: {1,4,6,7}"));
  EXPECT_TRUE(Contains(r.output, "heaviest: {1,2,3}"));
  EXPECT_TRUE(Contains(r.output, "default: {2,3,6,8}"));
  EXPECT_TRUE(Contains(r.output, "bang-for-buck: {2,3,6,7}"));
  EXPECT_TRUE(Contains(r.output, "lambda=1"));
}

TEST(CliTest, LiftWorkedCases) {
  CliRun r = Cli("lift " + Data("domination_case1.txt") + " --cover 1,2,3,4 --method gns");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "1/6, 1/3, 4/3")) << r.output;
  r = Cli("lift " + Data("facet_example.txt") + " --cover 1,2,3,4 --method pc");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "1, 1, 1, 1, 1/2, 1/2, 1/2, 3/2 <= 3")) << r.output;
}

TEST(CliTest, Checks) {
  CliRun r = Cli("check " + Data("facet_example.txt") +
              " --cover 1,2,3,4 --what facet-pc");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "FACET (oracle-confirmed, rank 7)")) << r.output;

  r = Cli("check " + Data("domination_case4.txt") +
          " --cover 1,2,3,4 --what domination");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "INCOMPARABLE")) << r.output;

  r = Cli("check " + Data("logistic_counterexample.txt") +
          " --cover 2,3,4 --what validity --logistic 0.9");
  EXPECT_TRUE(Contains(r.output, "INVALID, witness (0,0,0,0,1,1,1)")) << r.output;

  r = Cli("check " + Data("facet_example.txt") +
          " --cover 1,2,3,4 --what superadd --method pc");
  EXPECT_TRUE(Contains(r.output, "SUPERADDITIVE")) << r.output;
  EXPECT_FALSE(Contains(r.output, "NOT SUPERADDITIVE"));
}

TEST(CliTest, SolveWithJson) {
  CliRun r = Cli("solve " + Data("node_example.txt") + " --lift smart --json -");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output.rfind("{", 0), 0u) << r.output;
  EXPECT_FALSE(Contains(r.output, "status:"));
  EXPECT_TRUE(Contains(r.output, "\"objective\": 27"));
  EXPECT_TRUE(Contains(r.output, "\"proven_optimal\": true"));
  EXPECT_TRUE(Contains(r.output, "\"config\": \"lift=smart;"));
}

TEST(CliTest, SolvePrintsSummary) {
  CliRun r = Cli("solve " + Data("node_example.txt") + " --lift pc");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "objective: 27")) << r.output;
}

TEST(CliTest, SolveNodeLimitIsNotProven) {
  const auto dir = std::filesystem::temp_directory_path() / "liftcover_cli_test";
  std::filesystem::create_directories(dir);
  const auto inst = dir / "wc.txt";
  CliRun g = Cli("gen weakly-correlated --n 30 --m 3 --seed 1 --out " + inst.string());
  ASSERT_EQ(g.exit_code, 0) << g.output;
  CliRun r = Cli("solve " + inst.string() + " --lift none --node-limit 1");
  EXPECT_EQ(r.exit_code, 3) << r.output;
  EXPECT_TRUE(Contains(r.output, "status: stopped"));
  std::filesystem::remove_all(dir);
}

TEST(CliTest, BenchWritesBothCsvFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "liftcover_cli_bench";
  std::filesystem::create_directories(dir);
  const auto out = dir / "results.csv";
  CliRun r = Cli("bench " + Data("bench_small.spec") + " --out " + out.string() +
              " --jobs 2");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const std::string records = Slurp(out);
  const std::string profile = Slurp(dir / "results_profile.csv");
  EXPECT_EQ(records.rfind("instance,seed,config,fingerprint,", 0), 0u);
  EXPECT_EQ(profile.rfind("method,threshold,instances_solved", 0), 0u);
  EXPECT_TRUE(Contains(profile, "plain,1,"));
  std::filesystem::remove_all(dir);
}

TEST(CliTest, GenToStdout) {
  CliRun r = Cli("gen chvatal --n 5 --seed 2");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(Contains(r.output, "# name: chvatal-n5-s2"));
  EXPECT_TRUE(Contains(r.output, "5 1"));
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("").exit_code, 2);
  EXPECT_EQ(Cli("frobnicate").exit_code, 2);
  EXPECT_EQ(Cli("covers " + Data("node_example.txt") + " --method widest").exit_code, 2);
  CliRun r = Cli("lift " + Data("facet_example.txt") + " --cover 1,2");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(Contains(r.output, "not a cover")) << r.output;
  EXPECT_EQ(Cli("solve /nonexistent/instance.txt").exit_code, 1);
  EXPECT_EQ(Cli("--help").exit_code, 0);
}

TEST(CliTest, OracleBudgetExitCode) {
  const auto path = std::filesystem::temp_directory_path() / "liftcover_wide.txt";
  {
    std::ofstream out(path);
    out << "15 1\n";
    for (int j = 0; j < 15; ++j) out << "1 ";
    out << "\n";
    for (int j = 0; j < 15; ++j) out << "1 ";
    out << "2\n";
  }
  CliRun r = Cli("check " + path.string() + " --cover 1,2,3 --what facet-gns");
  EXPECT_EQ(r.exit_code, 4) << r.output;
  std::filesystem::remove(path);
}

}  // namespace
