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

// C interface to the liftcover library. All handles are opaque and owned by
// the caller, who releases them with the matching *_free function. Functions
// returning lc_status leave a thread-local message in lc_last_error() on
// failure. Indices are 0-based.

#ifndef LIFTCOVER_LIFTCOVER_H_
#define LIFTCOVER_LIFTCOVER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(LIFTCOVER_BUILDING_LIBRARY)
#define LC_API __attribute__((visibility("default")))
#else
#define LC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
  LC_OK = 0,
  LC_INVALID_ARGUMENT = 1,
  LC_INDEX_OUT_OF_RANGE = 2,
  LC_NOT_A_COVER = 3,
  LC_NOT_MINIMAL = 4,
  LC_PRECONDITION_VIOLATED = 5,
  LC_BUDGET_EXCEEDED = 6,
  LC_PARSE_ERROR = 7,
  LC_IO_ERROR = 8,
  LC_INFEASIBLE_ROW = 9,
  LC_NUMERICAL_FAILURE = 10,
  LC_OVERFLOW = 11,
  LC_DIMENSION_MISMATCH = 12,
  LC_INTERNAL_ERROR = 99
} lc_status;

LC_API const char* lc_version(void);
LC_API const char* lc_status_name(lc_status status);
// Message of the last failure on this thread; never NULL.
LC_API const char* lc_last_error(void);
// Releases strings returned through char** out-parameters.
LC_API void lc_string_free(char* s);

/* Instances ------------------------------------------------------------ */

typedef struct lc_instance lc_instance;

LC_API lc_status lc_instance_read(const char* path, lc_instance** out);
LC_API lc_status lc_instance_parse(const char* text, lc_instance** out);
// kind: "uncorrelated", "weakly-correlated" or "chvatal" (m ignored).
LC_API lc_status lc_instance_generate(const char* kind, int n, int m,
                                      uint64_t seed, lc_instance** out);
LC_API lc_status lc_instance_write(const lc_instance* inst, const char* path);
LC_API lc_status lc_instance_format(const lc_instance* inst, char** text);
LC_API void lc_instance_free(lc_instance* inst);

LC_API const char* lc_instance_name(const lc_instance* inst);
LC_API int lc_instance_num_vars(const lc_instance* inst);
LC_API int lc_instance_num_rows(const lc_instance* inst);

// Optimal point of the LP relaxation with the instance's own rows; x must
// hold num_vars entries.
LC_API lc_status lc_root_lp(const lc_instance* inst, double* x,
                            double* objective);

/* Cover parameters ----------------------------------------------------- */

// cover lists instance variables of the given row. mu receives t + 1
// entries (mu_0 .. mu_t), rho receives t entries (rho_0 .. rho_{t-1}).
LC_API lc_status lc_cover_params(const lc_instance* inst, int row,
                                 const int* cover, int t, int64_t* mu,
                                 int64_t* lambda, int64_t* rho);

/* Cover generation ----------------------------------------------------- */

typedef struct lc_cover_list lc_cover_list;

// method: "contiguous", "spread", "heaviest", "default", "bang-for-buck" or
// "all". x holds num_vars LP values.
LC_API lc_status lc_generate_covers(const lc_instance* inst, int row,
                                    const double* x, const char* method,
                                    lc_cover_list** out);
LC_API int lc_cover_list_count(const lc_cover_list* list);
LC_API const char* lc_cover_list_method(const lc_cover_list* list, int i);
LC_API int lc_cover_list_size(const lc_cover_list* list, int i);
// Instance variable index of the k-th member of cover i.
LC_API int lc_cover_list_item(const lc_cover_list* list, int i, int k);
LC_API void lc_cover_list_free(lc_cover_list* list);

/* Lifting -------------------------------------------------------------- */

typedef struct lc_cut_list lc_cut_list;

// method: "pc", "gns", "smart" or "k=<rational>". Cuts are expressed over
// the instance variables.
LC_API lc_status lc_lift(const lc_instance* inst, int row, const int* cover,
                         int t, const char* method, lc_cut_list** out);
LC_API int lc_cut_list_count(const lc_cut_list* list);
LC_API int lc_cut_num_coefficients(const lc_cut_list* list, int i);
LC_API void lc_cut_coefficient(const lc_cut_list* list, int i, int j,
                               int64_t* num, int64_t* den);
LC_API void lc_cut_rhs(const lc_cut_list* list, int i, int64_t* num,
                       int64_t* den);
LC_API const char* lc_cut_method(const lc_cut_list* list, int i);
// "a_1, ..., a_n <= rhs" with exact rationals.
LC_API lc_status lc_cut_format(const lc_cut_list* list, int i, char** text);
// Lifted coefficients of the row items outside the cover, in the row's
// own orientation (complemented items keep the lifted sign).
LC_API lc_status lc_cut_format_lifted(const lc_cut_list* list, int i,
                                      char** text);
LC_API void lc_cut_list_free(lc_cut_list* list);

/* Checks --------------------------------------------------------------- */

typedef struct lc_check_result lc_check_result;

typedef struct lc_check_options {
  // Lifting to examine for "superadd", "facet-*" and "validity":
  // "pc", "gns", "smart" or "k=<rational>". NULL means "gns".
  const char* method;
  // Explicit cut for "validity": comma or space separated rationals or
  // decimals over the instance variables, plus its right-hand side.
  const char* raw_cut;
  const char* raw_rhs;
  // When > 0, use the tabulated logistic w with this steepness instead.
  double logistic_steepness;
} lc_check_options;

LC_API void lc_check_options_init(lc_check_options* options);

// what: "superadd", "facet-pc", "facet-gns", "domination" or "validity".
// Oracle budgets surface as LC_BUDGET_EXCEEDED.
LC_API lc_status lc_check(const lc_instance* inst, int row, const int* cover,
                          int t, const char* what,
                          const lc_check_options* options,
                          lc_check_result** out);
// 1 when the property holds (valid, facet, superadditive); for domination
// always 1.
LC_API int lc_check_result_holds(const lc_check_result* result);
// Short verdict such as "FACET", "INVALID" or "INCOMPARABLE".
LC_API const char* lc_check_result_verdict(const lc_check_result* result);
// Verdict plus certificate, e.g. "INVALID, witness (0,0,1)".
LC_API const char* lc_check_result_text(const lc_check_result* result);
LC_API void lc_check_result_free(lc_check_result* result);

/* Branch and cut ------------------------------------------------------- */

typedef struct lc_solve_config {
  const char* lifting;        // "none", "pc", "gns", "smart"
  const char* covers;         // routine names joined by ',' or '+'
  const char* node_selection; // "best-bound" or "dfs"
  int per_node_cut_limit;
  int64_t total_cut_limit;    // < 0: unlimited
  int64_t node_limit;         // < 0: unlimited
  double time_limit;          // <= 0: unlimited
  uint64_t seed;
} lc_solve_config;

LC_API void lc_solve_config_init(lc_solve_config* config);

typedef struct lc_solve_result lc_solve_result;

LC_API lc_status lc_solve(const lc_instance* inst,
                          const lc_solve_config* config,
                          lc_solve_result** out);
// "optimal", "infeasible" or "stopped".
LC_API const char* lc_solve_result_status(const lc_solve_result* result);
LC_API int lc_solve_result_has_incumbent(const lc_solve_result* result);
LC_API int64_t lc_solve_result_objective(const lc_solve_result* result);
// Copies the incumbent (num_vars entries); returns 0 if there is none.
LC_API int lc_solve_result_point(const lc_solve_result* result, int* x);
LC_API int lc_solve_result_proven_optimal(const lc_solve_result* result);
LC_API int64_t lc_solve_result_tree_size(const lc_solve_result* result);
LC_API int64_t lc_solve_result_cuts_generated(const lc_solve_result* result);
LC_API int64_t lc_solve_result_cuts_added(const lc_solve_result* result);
LC_API int64_t lc_solve_result_lp_iterations(const lc_solve_result* result);
LC_API double lc_solve_result_wall_time(const lc_solve_result* result);
LC_API const char* lc_solve_result_fingerprint(const lc_solve_result* result);
LC_API void lc_solve_result_free(lc_solve_result* result);

/* Benchmarks ----------------------------------------------------------- */

// Runs a bench spec file; returns the record CSV and the profile CSV.
LC_API lc_status lc_bench_run(const char* spec_path, int jobs, char** csv,
                              char** profile_csv);

#ifdef __cplusplus
}
#endif

#endif  // LIFTCOVER_LIFTCOVER_H_
