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

#include "liftcover/liftcover.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <vector>

namespace {

std::string Data(const char* name) {
  return std::string(LIFTCOVER_TEST_DATA) + "/" + name;
}

lc_instance* Load(const char* name) {
  lc_instance* inst = nullptr;
  EXPECT_EQ(lc_instance_read(Data(name).c_str(), &inst), LC_OK) << lc_last_error();
  return inst;
}

std::string Take(char* s) {
  std::string out = s ? s : "";
  lc_string_free(s);
  return out;
}

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STREQ(lc_version(), "0.1.0");
  EXPECT_STREQ(lc_status_name(LC_OK), "OK");
  EXPECT_STREQ(lc_status_name(LC_NOT_MINIMAL), "NotMinimal");
}

TEST(CApiTest, InstanceLifecycle) {
  lc_instance* inst = Load("node_example.txt");
  ASSERT_NE(inst, nullptr);
  EXPECT_STREQ(lc_instance_name(inst), "node-example");
  EXPECT_EQ(lc_instance_num_vars(inst), 8);
  EXPECT_EQ(lc_instance_num_rows(inst), 1);
  char* text = nullptr;
  ASSERT_EQ(lc_instance_format(inst, &text), LC_OK);
  lc_instance* copy = nullptr;
  ASSERT_EQ(lc_instance_parse(text, &copy), LC_OK);
  lc_string_free(text);
  EXPECT_EQ(lc_instance_num_vars(copy), 8);
  lc_instance_free(copy);
  lc_instance_free(inst);
  lc_instance_free(nullptr);
}

TEST(CApiTest, ErrorsAreReported) {
  lc_instance* inst = nullptr;
  EXPECT_EQ(lc_instance_parse("2 1\n1 x\n", &inst), LC_PARSE_ERROR);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(lc_last_error()).find("line 2"), std::string::npos);
  EXPECT_EQ(lc_instance_read("/nonexistent.txt", &inst), LC_IO_ERROR);
  EXPECT_EQ(lc_instance_parse(nullptr, &inst), LC_INVALID_ARGUMENT);
  EXPECT_EQ(lc_instance_generate("strongly", 5, 1, 1, &inst),
            LC_INVALID_ARGUMENT);
}

TEST(CApiTest, Generate) {
  lc_instance* inst = nullptr;
  ASSERT_EQ(lc_instance_generate("weakly-correlated", 40, 5, 7, &inst), LC_OK);
  EXPECT_STREQ(lc_instance_name(inst), "wc-n40-m5-s7");
  EXPECT_EQ(lc_instance_num_rows(inst), 5);
  lc_instance_free(inst);
}

TEST(CApiTest, CoverParams) {
  lc_instance* inst = Load("facet_example.txt");
  const int cover[] = {0, 1, 2, 3};
  int64_t mu[5], lambda = 0, rho[4];
  ASSERT_EQ(lc_cover_params(inst, 0, cover, 4, mu, &lambda, rho), LC_OK);
  EXPECT_EQ(mu[1], 16);
  EXPECT_EQ(mu[2], 30);
  EXPECT_EQ(mu[3], 43);
  EXPECT_EQ(mu[4], 52);
  EXPECT_EQ(lambda, 8);
  EXPECT_EQ(rho[1], 6);
  EXPECT_EQ(rho[2], 5);
  EXPECT_EQ(rho[3], 1);
  const int not_minimal[] = {0, 1, 2, 3, 4};
  int64_t mu5[6], rho5[5];
  EXPECT_EQ(lc_cover_params(inst, 0, not_minimal, 5, mu5, &lambda, rho5),
            LC_NOT_MINIMAL);
  EXPECT_EQ(lc_cover_params(inst, 3, cover, 4, mu, &lambda, rho),
            LC_INDEX_OUT_OF_RANGE);
  lc_instance_free(inst);
}

TEST(CApiTest, CoversOnWorkedNode) {
  lc_instance* inst = Load("node_example.txt");
  const double x[] = {0.1, 0.8, 0.7, 0.4, 0, 1, 0.2, 0.8};
  lc_cover_list* list = nullptr;
  ASSERT_EQ(lc_generate_covers(inst, 0, x, "all", &list), LC_OK);
  std::vector<std::string> rendered;
  for (int i = 0; i < lc_cover_list_count(list); ++i) {
    std::string s = std::string(lc_cover_list_method(list, i)) + ":";
    for (int k = 0; k < lc_cover_list_size(list, i); ++k) {
      s += " " + std::to_string(lc_cover_list_item(list, i, k) + 1);
    }
    rendered.push_back(s);
  }
  EXPECT_EQ(rendered, (std::vector<std::string>{
                          "contiguous: 1 2 3", "contiguous: 2 3 4 6",
                          "contiguous: 3 4 6 7 8", "spread: 1 4 6 7",
                          "spread: 2 4 6 7", "spread: 3 4 6 7 8",
                          "heaviest: 1 2 3", "default: 2 3 6 8",
                          "bang-for-buck: 2 3 6 7"}));
  lc_cover_list_free(list);
  EXPECT_EQ(lc_generate_covers(inst, 0, x, "widest", &list),
            LC_INVALID_ARGUMENT);
  lc_instance_free(inst);
}

TEST(CApiTest, LiftAndFormat) {
  lc_instance* inst = Load("domination_case1.txt");
  const int cover[] = {0, 1, 2, 3};
  lc_cut_list* cuts = nullptr;
  ASSERT_EQ(lc_lift(inst, 0, cover, 4, "gns", &cuts), LC_OK);
  ASSERT_EQ(lc_cut_list_count(cuts), 1);
  EXPECT_EQ(lc_cut_num_coefficients(cuts, 0), 7);
  int64_t num = 0, den = 0;
  lc_cut_coefficient(cuts, 0, 4, &num, &den);
  EXPECT_EQ(num, 1);
  EXPECT_EQ(den, 6);
  lc_cut_rhs(cuts, 0, &num, &den);
  EXPECT_EQ(num, 3);
  EXPECT_EQ(den, 1);
  char* text = nullptr;
  ASSERT_EQ(lc_cut_format(cuts, 0, &text), LC_OK);
  EXPECT_EQ(Take(text), "1, 1, 1, 1, 1/6, 1/3, 4/3 <= 3");
  ASSERT_EQ(lc_cut_format_lifted(cuts, 0, &text), LC_OK);
  EXPECT_EQ(Take(text), "1/6, 1/3, 4/3");
  EXPECT_STREQ(lc_cut_method(cuts, 0), "gns");
  lc_cut_list_free(cuts);

  ASSERT_EQ(lc_lift(inst, 0, cover, 4, "k=1/12", &cuts), LC_OK);
  ASSERT_EQ(lc_cut_format_lifted(cuts, 0, &text), LC_OK);
  EXPECT_EQ(Take(text), "1/3, 5/12, 17/12");
  lc_cut_list_free(cuts);

  ASSERT_EQ(lc_lift(inst, 0, cover, 4, "smart", &cuts), LC_OK);
  EXPECT_EQ(lc_cut_list_count(cuts), 1);
  EXPECT_STREQ(lc_cut_method(cuts, 0), "pc");
  lc_cut_list_free(cuts);

  EXPECT_EQ(lc_lift(inst, 0, cover, 4, "k=1", &cuts), LC_INVALID_ARGUMENT);
  const int short_cover[] = {0, 1};
  EXPECT_EQ(lc_lift(inst, 0, short_cover, 2, "pc", &cuts), LC_NOT_A_COVER);
  lc_instance_free(inst);
}

TEST(CApiTest, DominationChecks) {
  const char* expected[] = {"PC_STRICTLY_DOMINATES", "IDENTICAL",
                            "GNS_STRICTLY_DOMINATES", "INCOMPARABLE"};
  for (int c = 0; c < 4; ++c) {
    const std::string name = "domination_case" + std::to_string(c + 1) + ".txt";
    lc_instance* inst = Load(name.c_str());
    const int cover[] = {0, 1, 2, 3};
    lc_check_result* result = nullptr;
    ASSERT_EQ(lc_check(inst, 0, cover, 4, "domination", nullptr, &result), LC_OK);
    EXPECT_STREQ(lc_check_result_verdict(result), expected[c]);
    EXPECT_EQ(lc_check_result_holds(result), 1);
    lc_check_result_free(result);
    lc_instance_free(inst);
  }
}

TEST(CApiTest, FacetAndValidityChecks) {
  lc_instance* inst = Load("facet_example.txt");
  const int cover[] = {0, 1, 2, 3};
  lc_check_result* result = nullptr;
  ASSERT_EQ(lc_check(inst, 0, cover, 4, "facet-pc", nullptr, &result), LC_OK);
  EXPECT_STREQ(lc_check_result_text(result), "FACET (oracle-confirmed, rank 7)");
  EXPECT_EQ(lc_check_result_holds(result), 1);
  lc_check_result_free(result);
  ASSERT_EQ(lc_check(inst, 0, cover, 4, "facet-gns", nullptr, &result), LC_OK);
  EXPECT_STREQ(lc_check_result_verdict(result), "NOT FACET");
  EXPECT_EQ(lc_check_result_holds(result), 0);
  lc_check_result_free(result);
  lc_instance_free(inst);

  lc_instance* logistic = Load("logistic_counterexample.txt");
  const int lcover[] = {1, 2, 3};
  lc_check_options options;
  lc_check_options_init(&options);
  options.logistic_steepness = 0.9;
  ASSERT_EQ(lc_check(logistic, 0, lcover, 3, "validity", &options, &result),
            LC_OK);
  EXPECT_STREQ(lc_check_result_text(result), "INVALID, witness (0,0,0,0,1,1,1)");
  EXPECT_EQ(lc_check_result_holds(result), 0);
  lc_check_result_free(result);

  lc_check_options_init(&options);
  options.raw_cut = "0 1 1 1 0 0 0";
  options.raw_rhs = "2";
  ASSERT_EQ(lc_check(logistic, 0, lcover, 3, "validity", &options, &result),
            LC_OK);
  EXPECT_EQ(lc_check_result_holds(result), 1);
  lc_check_result_free(result);

  EXPECT_EQ(lc_check(logistic, 0, lcover, 3, "sideways", nullptr, &result),
            LC_INVALID_ARGUMENT);
  lc_instance_free(logistic);
}

TEST(CApiTest, SolveAndResults) {
  lc_instance* inst = Load("node_example.txt");
  lc_solve_config config;
  lc_solve_config_init(&config);
  lc_solve_result* result = nullptr;
  ASSERT_EQ(lc_solve(inst, &config, &result), LC_OK);
  EXPECT_STREQ(lc_solve_result_status(result), "optimal");
  EXPECT_EQ(lc_solve_result_has_incumbent(result), 1);
  EXPECT_EQ(lc_solve_result_objective(result), 27);
  EXPECT_EQ(lc_solve_result_proven_optimal(result), 1);
  EXPECT_GE(lc_solve_result_tree_size(result), 1);
  std::vector<int> x(8);
  EXPECT_EQ(lc_solve_result_point(result, x.data()), 1);
  EXPECT_STREQ(lc_solve_result_fingerprint(result),
               "lift=pc;covers=contiguous;l=10;select=best-bound");
  lc_solve_result_free(result);

  config.lifting = "magic";
  EXPECT_EQ(lc_solve(inst, &config, &result), LC_INVALID_ARGUMENT);
  lc_solve_config_init(&config);
  config.covers = "contiguous+spread";
  config.lifting = "smart";
  config.node_selection = "dfs";
  ASSERT_EQ(lc_solve(inst, &config, &result), LC_OK);
  EXPECT_EQ(lc_solve_result_objective(result), 27);
  lc_solve_result_free(result);
  lc_instance_free(inst);
}

TEST(CApiTest, RootLp) {
  lc_instance* inst = Load("node_example.txt");
  std::vector<double> x(8);
  double objective = 0;
  ASSERT_EQ(lc_root_lp(inst, x.data(), &objective), LC_OK);
  EXPECT_NEAR(objective, 26 + 7.0 / 3, 1e-9);
  lc_instance_free(inst);
}

TEST(CApiTest, BenchRun) {
  char* csv = nullptr;
  char* profile = nullptr;
  ASSERT_EQ(lc_bench_run(Data("bench_small.spec").c_str(), 2, &csv, &profile),
            LC_OK);
  const std::string records = Take(csv);
  const std::string curve = Take(profile);
  EXPECT_EQ(records.rfind("instance,seed,config,", 0), 0u);
  EXPECT_EQ(curve.rfind("method,threshold,instances_solved\n", 0), 0u);
  EXPECT_EQ(lc_bench_run("/nonexistent.spec", 1, &csv, &profile), LC_IO_ERROR);
}

}  // namespace
