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

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "liftcover/bench.h"
#include "liftcover/branch_and_cut.h"
#include "liftcover/cover_gen.h"
#include "liftcover/error.h"
#include "liftcover/instances.h"
#include "liftcover/lifting.h"
#include "liftcover/oracles.h"
#include "liftcover/piecewise.h"
#include "liftcover/simplex.h"

using liftcover::Error;
using liftcover::ErrorCode;
using liftcover::Rational;

struct lc_instance {
  liftcover::IpInstance inst;
};

struct lc_cover_list {
  std::vector<std::string> methods;
  std::vector<std::vector<int>> covers;
};

struct lc_cut_list {
  std::vector<liftcover::InstanceCut> cuts;
  std::vector<std::vector<int>> lifted_items;  // row items outside the cover
};

struct lc_check_result {
  bool holds = false;
  std::string verdict;
  std::string text;
};

struct lc_solve_result {
  liftcover::BncResult result;
  std::string fingerprint;
};

namespace {

thread_local std::string last_error;

lc_status StatusOf(ErrorCode code) { return static_cast<lc_status>(code); }

template <typename F>
lc_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return LC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LC_INTERNAL_ERROR;
  }
}

void Require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, what);
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const liftcover::NormalizedRow& RowOf(const liftcover::IpInstance& inst,
                                      int row) {
  if (row < 0 || row >= inst.m()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(row + 1) + " out of range [1, " +
                    std::to_string(inst.m()) + "]");
  }
  const liftcover::NormalizedRow& nr = inst.normalized[row];
  if (!nr.row) {
    throw Error(ErrorCode::kInvalidArgument,
                "row " + std::to_string(row + 1) +
                    " has no free variables after normalization");
  }
  return nr;
}

// Instance variables of a cover to item positions of the row.
std::vector<int> ItemsOf(const liftcover::NormalizedRow& nr, const int* cover,
                         int t) {
  Require(cover != nullptr || t == 0, "cover is NULL");
  std::vector<int> items;
  for (int i = 0; i < t; ++i) {
    int found = -1;
    for (size_t k = 0; k < nr.variables.size(); ++k) {
      if (nr.variables[k] == cover[i]) found = static_cast<int>(k);
    }
    if (found < 0) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "variable " + std::to_string(cover[i] + 1) +
                      " is not a free variable of the row");
    }
    items.push_back(found);
  }
  return items;
}

// Item positions back to sorted 1-based instance variables for messages.
std::vector<int> VariablesOf(const liftcover::NormalizedRow& nr,
                             const std::vector<int>& items) {
  std::vector<int> vars;
  for (int k : items) vars.push_back(nr.variables[k]);
  std::sort(vars.begin(), vars.end());
  return vars;
}

liftcover::CoverParams ParamsFor(const liftcover::NormalizedRow& nr,
                                 const std::vector<int>& items) {
  try {
    return liftcover::CoverParams::Create(*nr.row, items);
  } catch (const Error& e) {
    // Item positions in the message mean little to callers; restate.
    std::string msg = e.what();
    if (e.code() == ErrorCode::kNotMinimal || e.code() == ErrorCode::kNotACover) {
      std::ostringstream out;
      out << "variables {";
      const std::vector<int> vars = VariablesOf(nr, items);
      for (size_t i = 0; i < vars.size(); ++i) {
        out << (i ? "," : "") << vars[i] + 1;
      }
      out << "}: " << msg;
      msg = out.str();
    }
    throw Error(e.code(), msg);
  }
}

std::vector<liftcover::LiftedCut> LiftByName(
    const liftcover::CoverParams& params, const std::string& method) {
  if (method == "pc") return {liftcover::LiftPc(params)};
  if (method == "gns") return {liftcover::LiftGns(params)};
  if (method == "smart") return liftcover::LiftSmart(params);
  if (method.rfind("k=", 0) == 0) {
    const Rational k = Rational::Parse(method.substr(2));
    return {liftcover::LiftWith(params, liftcover::LiftParam::Slope(k))};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown lifting method '" + method +
                  "' (expected pc, gns, smart or k=<rational>)");
}

liftcover::LiftParam ParamByName(const std::string& method) {
  if (method == "pc") return liftcover::LiftParam::Pc();
  if (method == "gns") return liftcover::LiftParam::Gns();
  if (method.rfind("k=", 0) == 0) {
    return liftcover::LiftParam::Slope(Rational::Parse(method.substr(2)));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "superadditivity needs pc, gns or k=<rational>, got '" + method +
                  "'");
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',' || c == ';' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<Rational> out;
  std::string word;
  while (in >> word) out.push_back(Rational::Parse(word));
  return out;
}

std::string PointString(const std::vector<int>& x) {
  std::string out = "(";
  for (size_t j = 0; j < x.size(); ++j) {
    out += (j ? "," : "");
    out += std::to_string(x[j]);
  }
  return out + ")";
}

template <typename T>
std::string NumberString(const T& v) {
  std::ostringstream out;
  if constexpr (std::is_same_v<T, double>) {
    out.precision(6);
  }
  out << v;
  return out.str();
}

// Cut over instance variables to the item space of the row; every nonzero
// coefficient must belong to a free variable of the row.
std::pair<std::vector<Rational>, Rational> ToItemSpace(
    const liftcover::IpInstance& inst, const liftcover::NormalizedRow& nr,
    const std::vector<Rational>& alpha, Rational rhs) {
  if (static_cast<int>(alpha.size()) != inst.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cut has " + std::to_string(alpha.size()) +
                    " coefficients, instance has " + std::to_string(inst.n()) +
                    " variables");
  }
  std::vector<bool> in_row(inst.n(), false);
  for (int v : nr.variables) in_row[v] = true;
  for (int v = 0; v < inst.n(); ++v) {
    if (!in_row[v] && !alpha[v].IsZero()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cut has a coefficient on variable " + std::to_string(v + 1) +
                      ", which is not a free variable of the row");
    }
  }
  std::vector<Rational> items;
  for (int v : nr.variables) {
    if (nr.complemented[v]) {
      items.push_back(-alpha[v]);
      rhs -= alpha[v];
    } else {
      items.push_back(alpha[v]);
    }
  }
  return {items, rhs};
}

void CheckValidity(const liftcover::IpInstance& inst,
                   const liftcover::NormalizedRow& nr,
                   const std::vector<Rational>& item_alpha,
                   const Rational& item_rhs, lc_check_result& out) {
  const liftcover::ValidityReport report =
      liftcover::CutValid(*nr.row, item_alpha, item_rhs);
  out.holds = report.valid;
  if (report.valid) {
    out.verdict = "VALID";
    out.text = "VALID (max lhs " + report.max_lhs.ToString() + " <= rhs " +
               item_rhs.ToString() + ")";
    return;
  }
  std::vector<int> x(inst.n(), 0);
  for (size_t k = 0; k < nr.variables.size(); ++k) {
    const int v = nr.variables[k];
    x[v] = nr.complemented[v] ? 1 - report.witness[k] : report.witness[k];
  }
  for (const liftcover::VariableFixing& f : nr.fixings) x[f.variable] = f.value;
  out.verdict = "INVALID";
  out.text = "INVALID, witness " + PointString(x);
}

}  // namespace

extern "C" {

const char* lc_version(void) { return "0.1.0"; }

const char* lc_status_name(lc_status status) {
  switch (status) {
    case LC_OK: return "OK";
    case LC_INTERNAL_ERROR: return "InternalError";
    default:
      if (status >= LC_INVALID_ARGUMENT && status <= LC_DIMENSION_MISMATCH) {
        return liftcover::ErrorCodeName(static_cast<ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* lc_last_error(void) { return last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_instance_read(const char* path, lc_instance** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "path and out must be non-NULL");
    *out = new lc_instance{liftcover::ReadInstance(path)};
  });
}

lc_status lc_instance_parse(const char* text, lc_instance** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "text and out must be non-NULL");
    *out = new lc_instance{liftcover::ParseInstance(text)};
  });
}

lc_status lc_instance_generate(const char* kind, int n, int m, uint64_t seed,
                               lc_instance** out) {
  return Guard([&] {
    Require(kind != nullptr && out != nullptr, "kind and out must be non-NULL");
    const std::string k = kind;
    if (k == "chvatal") {
      *out = new lc_instance{liftcover::GenChvatal(n, seed)};
    } else if (auto mkp = liftcover::ParseMkpKind(k)) {
      *out = new lc_instance{liftcover::GenMkp(*mkp, n, m, seed)};
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown generator '" + k +
                      "' (expected uncorrelated, weakly-correlated, chvatal)");
    }
  });
}

lc_status lc_instance_write(const lc_instance* inst, const char* path) {
  return Guard([&] {
    Require(inst != nullptr && path != nullptr, "instance and path required");
    liftcover::WriteInstance(inst->inst, path);
  });
}

lc_status lc_instance_format(const lc_instance* inst, char** text) {
  return Guard([&] {
    Require(inst != nullptr && text != nullptr, "instance and text required");
    *text = Dup(liftcover::FormatInstance(inst->inst));
  });
}

void lc_instance_free(lc_instance* inst) { delete inst; }

const char* lc_instance_name(const lc_instance* inst) {
  return inst ? inst->inst.name.c_str() : "";
}
int lc_instance_num_vars(const lc_instance* inst) {
  return inst ? inst->inst.n() : 0;
}
int lc_instance_num_rows(const lc_instance* inst) {
  return inst ? inst->inst.m() : 0;
}

lc_status lc_root_lp(const lc_instance* inst, double* x, double* objective) {
  return Guard([&] {
    Require(inst != nullptr && x != nullptr, "instance and x required");
    const liftcover::LpSolution lp =
        liftcover::SolveLp(liftcover::RelaxationModel(inst->inst));
    if (lp.status != liftcover::LpStatus::kOptimal) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "the LP relaxation is infeasible");
    }
    std::copy(lp.x.begin(), lp.x.end(), x);
    if (objective) *objective = lp.objective;
  });
}

lc_status lc_cover_params(const lc_instance* inst, int row, const int* cover,
                          int t, int64_t* mu, int64_t* lambda, int64_t* rho) {
  return Guard([&] {
    Require(inst != nullptr, "instance required");
    const liftcover::NormalizedRow& nr = RowOf(inst->inst, row);
    const liftcover::CoverParams params = ParamsFor(nr, ItemsOf(nr, cover, t));
    for (int h = 0; h <= params.t(); ++h) {
      if (mu) mu[h] = params.mu(h);
      if (rho && h < params.t()) rho[h] = params.rho(h);
    }
    if (lambda) *lambda = params.lambda();
  });
}

lc_status lc_generate_covers(const lc_instance* inst, int row, const double* x,
                             const char* method, lc_cover_list** out) {
  return Guard([&] {
    Require(inst != nullptr && x != nullptr && method != nullptr &&
                out != nullptr,
            "instance, x, method and out required");
    const liftcover::NormalizedRow& nr = RowOf(inst->inst, row);
    std::vector<liftcover::CoverMethod> methods;
    if (std::string(method) == "all") {
      methods.assign(std::begin(liftcover::kAllCoverMethods),
                     std::end(liftcover::kAllCoverMethods));
    } else if (auto m = liftcover::ParseCoverMethod(method)) {
      methods.push_back(*m);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown cover routine '") + method + "'");
    }
    const liftcover::LpPoint point = liftcover::RowPoint(
        inst->inst, row,
        liftcover::LpPoint(std::vector<double>(x, x + inst->inst.n())));
    const std::vector<int64_t> c = liftcover::RowObjective(inst->inst, row);
    auto list = std::make_unique<lc_cover_list>();
    for (liftcover::CoverMethod m : methods) {
      for (const liftcover::Cover& cover :
           liftcover::GenerateCovers(m, *nr.row, point, c)) {
        list->methods.push_back(liftcover::CoverMethodName(m));
        list->covers.push_back(VariablesOf(nr, cover));
      }
    }
    *out = list.release();
  });
}

int lc_cover_list_count(const lc_cover_list* list) {
  return list ? static_cast<int>(list->covers.size()) : 0;
}
const char* lc_cover_list_method(const lc_cover_list* list, int i) {
  return list->methods.at(i).c_str();
}
int lc_cover_list_size(const lc_cover_list* list, int i) {
  return static_cast<int>(list->covers.at(i).size());
}
int lc_cover_list_item(const lc_cover_list* list, int i, int k) {
  return list->covers.at(i).at(k);
}
void lc_cover_list_free(lc_cover_list* list) { delete list; }

lc_status lc_lift(const lc_instance* inst, int row, const int* cover, int t,
                  const char* method, lc_cut_list** out) {
  return Guard([&] {
    Require(inst != nullptr && method != nullptr && out != nullptr,
            "instance, method and out required");
    const liftcover::NormalizedRow& nr = RowOf(inst->inst, row);
    const std::vector<int> items = ItemsOf(nr, cover, t);
    const liftcover::CoverParams params = ParamsFor(nr, items);
    auto list = std::make_unique<lc_cut_list>();
    std::vector<int> outside;
    for (size_t k = 0; k < nr.variables.size(); ++k) {
      if (!params.InCover(static_cast<int>(k))) outside.push_back(static_cast<int>(k));
    }
    for (liftcover::LiftedCut& cut : LiftByName(params, method)) {
      list->cuts.push_back(liftcover::ToInstanceCut(inst->inst, row, std::move(cut)));
      list->lifted_items.push_back(outside);
    }
    *out = list.release();
  });
}

int lc_cut_list_count(const lc_cut_list* list) {
  return list ? static_cast<int>(list->cuts.size()) : 0;
}
int lc_cut_num_coefficients(const lc_cut_list* list, int i) {
  return static_cast<int>(list->cuts.at(i).coefficients.size());
}
void lc_cut_coefficient(const lc_cut_list* list, int i, int j, int64_t* num,
                        int64_t* den) {
  const Rational& r = list->cuts.at(i).coefficients.at(j);
  if (num) *num = r.num();
  if (den) *den = r.den();
}
void lc_cut_rhs(const lc_cut_list* list, int i, int64_t* num, int64_t* den) {
  const Rational& r = list->cuts.at(i).rhs;
  if (num) *num = r.num();
  if (den) *den = r.den();
}
const char* lc_cut_method(const lc_cut_list* list, int i) {
  return liftcover::LiftMethodName(list->cuts.at(i).lifted.method);
}

lc_status lc_cut_format(const lc_cut_list* list, int i, char** text) {
  return Guard([&] {
    Require(list != nullptr && text != nullptr, "list and text required");
    const liftcover::InstanceCut& cut = list->cuts.at(i);
    std::string s;
    for (size_t j = 0; j < cut.coefficients.size(); ++j) {
      s += (j ? ", " : "") + cut.coefficients[j].ToString();
    }
    *text = Dup(s + " <= " + cut.rhs.ToString());
  });
}

lc_status lc_cut_format_lifted(const lc_cut_list* list, int i, char** text) {
  return Guard([&] {
    Require(list != nullptr && text != nullptr, "list and text required");
    const liftcover::InstanceCut& cut = list->cuts.at(i);
    std::string s;
    bool first = true;
    for (int k : list->lifted_items.at(i)) {
      s += (first ? "" : ", ") + cut.lifted.coefficients[k].ToString();
      first = false;
    }
    *text = Dup(s);
  });
}

void lc_cut_list_free(lc_cut_list* list) { delete list; }

void lc_check_options_init(lc_check_options* options) {
  if (options == nullptr) return;
  options->method = nullptr;
  options->raw_cut = nullptr;
  options->raw_rhs = nullptr;
  options->logistic_steepness = 0;
}

lc_status lc_check(const lc_instance* inst, int row, const int* cover, int t,
                   const char* what, const lc_check_options* options,
                   lc_check_result** out) {
  return Guard([&] {
    Require(inst != nullptr && what != nullptr && out != nullptr,
            "instance, what and out required");
    lc_check_options defaults;
    lc_check_options_init(&defaults);
    const lc_check_options& opt = options ? *options : defaults;
    const std::string method = opt.method ? opt.method : "gns";
    const std::string w = what;
    const liftcover::IpInstance& ip = inst->inst;
    const liftcover::NormalizedRow& nr = RowOf(ip, row);
    auto result = std::make_unique<lc_check_result>();

    if (w == "validity" && opt.raw_cut != nullptr) {
      Require(opt.raw_rhs != nullptr, "a raw cut needs a right-hand side");
      const std::vector<Rational> alpha = ParseRationalList(opt.raw_cut);
      auto [items, rhs] = ToItemSpace(ip, nr, alpha, Rational::Parse(opt.raw_rhs));
      CheckValidity(ip, nr, items, rhs, *result);
      *out = result.release();
      return;
    }

    const liftcover::CoverParams params = ParamsFor(nr, ItemsOf(nr, cover, t));
    if (w == "domination") {
      result->holds = true;
      result->verdict =
          liftcover::DominationVerdictName(liftcover::ClassifyDomination(params));
      result->text = result->verdict;
    } else if (w == "validity") {
      liftcover::LiftedCut cut =
          opt.logistic_steepness > 0
              ? liftcover::LiftWithW(
                    params, liftcover::LogisticW(opt.logistic_steepness,
                                                 static_cast<double>(params.rho1())))
              : LiftByName(params, method).front();
      CheckValidity(ip, nr, cut.coefficients, cut.rhs, *result);
    } else if (w == "facet-pc" || w == "facet-gns") {
      if (w == "facet-pc" && !params.AdmitsAllSlopes()) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "PC lifting needs mu_1 - lambda >= rho_1 for this cover");
      }
      const liftcover::LiftedCut cut = w == "facet-pc" ? liftcover::LiftPc(params)
                                                       : liftcover::LiftGns(params);
      const liftcover::FacetReport report = liftcover::FacetReportFor(*nr.row, cut);
      result->holds = report.is_facet;
      if (!report.is_valid) {
        CheckValidity(ip, nr, cut.coefficients, cut.rhs, *result);
        result->holds = false;
      } else if (report.is_facet) {
        result->verdict = "FACET";
        result->text = "FACET (oracle-confirmed, rank " +
                       std::to_string(report.affine_rank) + ")";
      } else {
        result->verdict = "NOT FACET";
        result->text = "NOT FACET (valid, tight points span affine rank " +
                       std::to_string(report.affine_rank) + " < " +
                       std::to_string(nr.row->size() - 1) + ")";
      }
    } else if (w == "superadd") {
      std::ostringstream text;
      if (opt.logistic_steepness > 0) {
        const auto g = liftcover::GwPiecewise(
            params, liftcover::LogisticW(opt.logistic_steepness,
                                         static_cast<double>(params.rho1())));
        liftcover::SuperadditivityOptions<double> so;
        so.tolerance = 1e-9;
        const auto v = liftcover::FindSuperadditivityViolation(g, so);
        result->holds = !v.has_value();
        if (v) {
          text << "NOT SUPERADDITIVE, g(z1) + g(z2) - g(z1 + z2) = "
               << NumberString(v->violation) << " at (" << NumberString(v->z1)
               << ", " << NumberString(v->z2) << ")";
        }
      } else {
        const auto g = liftcover::GkPiecewise(params, ParamByName(method));
        const auto v = liftcover::FindSuperadditivityViolation(g);
        result->holds = !v.has_value();
        if (v) {
          text << "NOT SUPERADDITIVE, g(z1) + g(z2) - g(z1 + z2) = "
               << v->violation << " at (" << v->z1 << ", " << v->z2 << ")";
        }
      }
      result->verdict = result->holds ? "SUPERADDITIVE" : "NOT SUPERADDITIVE";
      result->text = result->holds ? result->verdict : text.str();
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown check '" + w +
                      "' (expected superadd, facet-pc, facet-gns, domination, "
                      "validity)");
    }
    *out = result.release();
  });
}

int lc_check_result_holds(const lc_check_result* result) {
  return result && result->holds ? 1 : 0;
}
const char* lc_check_result_verdict(const lc_check_result* result) {
  return result ? result->verdict.c_str() : "";
}
const char* lc_check_result_text(const lc_check_result* result) {
  return result ? result->text.c_str() : "";
}
void lc_check_result_free(lc_check_result* result) { delete result; }

void lc_solve_config_init(lc_solve_config* config) {
  if (config == nullptr) return;
  config->lifting = "pc";
  config->covers = "contiguous";
  config->node_selection = "best-bound";
  config->per_node_cut_limit = 10;
  config->total_cut_limit = -1;
  config->node_limit = -1;
  config->time_limit = 0;
  config->seed = 0;
}

lc_status lc_solve(const lc_instance* inst, const lc_solve_config* config,
                   lc_solve_result** out) {
  return Guard([&] {
    Require(inst != nullptr && out != nullptr, "instance and out required");
    lc_solve_config defaults;
    lc_solve_config_init(&defaults);
    const lc_solve_config& c = config ? *config : defaults;
    liftcover::BncConfig bnc;
    if (c.lifting) {
      auto mode = liftcover::ParseLiftingMode(c.lifting);
      if (!mode) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("unknown lifting method '") + c.lifting + "'");
      }
      bnc.lifting = *mode;
    }
    if (c.covers) {
      bnc.cover_methods.clear();
      std::string list = c.covers;
      for (char& ch : list) {
        if (ch == '+') ch = ',';
      }
      std::istringstream in(list);
      std::string name;
      while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        if (name == "all") {
          bnc.cover_methods.assign(std::begin(liftcover::kAllCoverMethods),
                                   std::end(liftcover::kAllCoverMethods));
          continue;
        }
        auto m = liftcover::ParseCoverMethod(name);
        if (!m) {
          throw Error(ErrorCode::kInvalidArgument,
                      "unknown cover routine '" + name + "'");
        }
        bnc.cover_methods.push_back(*m);
      }
    }
    if (c.node_selection) {
      const std::string s = c.node_selection;
      if (s == "best-bound") {
        bnc.node_selection = liftcover::NodeSelection::kBestBound;
      } else if (s == "dfs") {
        bnc.node_selection = liftcover::NodeSelection::kDepthFirst;
      } else {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown node selection '" + s + "'");
      }
    }
    Require(c.per_node_cut_limit >= 0, "per-node cut limit must be >= 0");
    bnc.per_node_cut_limit = c.per_node_cut_limit;
    if (c.total_cut_limit >= 0) bnc.total_cut_limit = c.total_cut_limit;
    if (c.node_limit >= 0) bnc.node_limit = c.node_limit;
    if (c.time_limit > 0) bnc.time_limit = c.time_limit;
    bnc.seed = c.seed;
    auto result = std::make_unique<lc_solve_result>();
    result->result = liftcover::Solve(inst->inst, bnc);
    result->fingerprint = bnc.Fingerprint();
    *out = result.release();
  });
}

const char* lc_solve_result_status(const lc_solve_result* r) {
  return liftcover::BncStatusName(r->result.status);
}
int lc_solve_result_has_incumbent(const lc_solve_result* r) {
  return r->result.optimum.has_value() ? 1 : 0;
}
int64_t lc_solve_result_objective(const lc_solve_result* r) {
  return r->result.optimum.value_or(0);
}
int lc_solve_result_point(const lc_solve_result* r, int* x) {
  if (!r->result.optimum || x == nullptr) return 0;
  std::copy(r->result.x.begin(), r->result.x.end(), x);
  return 1;
}
int lc_solve_result_proven_optimal(const lc_solve_result* r) {
  return r->result.stats.proven_optimal ? 1 : 0;
}
int64_t lc_solve_result_tree_size(const lc_solve_result* r) {
  return r->result.stats.tree_size;
}
int64_t lc_solve_result_cuts_generated(const lc_solve_result* r) {
  return r->result.stats.cuts_generated;
}
int64_t lc_solve_result_cuts_added(const lc_solve_result* r) {
  return r->result.stats.cuts_added;
}
int64_t lc_solve_result_lp_iterations(const lc_solve_result* r) {
  return r->result.stats.lp_iterations;
}
double lc_solve_result_wall_time(const lc_solve_result* r) {
  return r->result.stats.wall_time;
}
const char* lc_solve_result_fingerprint(const lc_solve_result* r) {
  return r->fingerprint.c_str();
}
void lc_solve_result_free(lc_solve_result* r) { delete r; }

lc_status lc_bench_run(const char* spec_path, int jobs, char** csv,
                       char** profile_csv) {
  return Guard([&] {
    Require(spec_path != nullptr, "spec path required");
    const liftcover::BenchSpec spec = liftcover::ReadBenchSpec(spec_path);
    const std::vector<liftcover::BenchRecord> records =
        liftcover::RunBench(spec, jobs);
    if (csv) *csv = Dup(liftcover::BenchCsv(records));
    if (profile_csv) *profile_csv = Dup(liftcover::ProfileCsv(records));
  });
}

}  // extern "C"
