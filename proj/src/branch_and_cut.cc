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

#include "liftcover/branch_and_cut.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "liftcover/error.h"
#include "liftcover/knapsack.h"
#include "liftcover/simplex.h"

namespace liftcover {
namespace {

struct CutKeyHash {
  size_t operator()(const std::vector<Rational>& key) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const Rational& r : key) {
      h ^= std::hash<Rational>()(r) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Coefficients followed by the rhs.
using CutKey = std::vector<Rational>;
using CutKeySet = std::unordered_set<CutKey, CutKeyHash>;

CutKey KeyOf(const InstanceCut& cut) {
  CutKey key = cut.coefficients;
  key.push_back(cut.rhs);
  return key;
}

std::vector<LiftedCut> Lift(const CoverParams& params, LiftingMode mode) {
  switch (mode) {
    case LiftingMode::kNone: return {};
    case LiftingMode::kPc: return {LiftPc(params)};
    case LiftingMode::kGns: return {LiftGns(params)};
    case LiftingMode::kSmart: return LiftSmart(params);
  }
  return {};
}

std::vector<InstanceCut> Separate(const IpInstance& instance,
                                  const LpPoint& x, const BncConfig& config,
                                  const CutKeySet* pool) {
  if (x.size() != instance.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP point has " + std::to_string(x.size()) +
                    " entries, instance has " + std::to_string(instance.n()) +
                    " variables");
  }
  std::vector<InstanceCut> out;
  if (config.lifting == LiftingMode::kNone) return out;
  CutKeySet seen;
  for (int r = 0; r < instance.m(); ++r) {
    const NormalizedRow& nr = instance.normalized[r];
    if (!nr.row) continue;
    const KnapsackRow& row = *nr.row;
    const LpPoint point = RowPoint(instance, r, x);
    const std::vector<int64_t> c = RowObjective(instance, r);
    // Covers are visited in the order the routines produce them.
    std::vector<Cover> ordered;
    std::set<Cover> emitted;
    for (CoverMethod method : config.cover_methods) {
      for (Cover& cover : GenerateCovers(method, row, point, c)) {
        if (emitted.insert(cover).second) ordered.push_back(std::move(cover));
      }
    }
    for (const Cover& cover : ordered) {
      const CoverParams params = CoverParams::Create(row, cover);
      for (LiftedCut& lifted : Lift(params, config.lifting)) {
        InstanceCut cut = ToInstanceCut(instance, r, std::move(lifted));
        double lhs = 0;
        for (int v = 0; v < instance.n(); ++v) {
          if (!cut.coefficients[v].IsZero()) {
            lhs += cut.coefficients[v].ToDouble() * x[v];
          }
        }
        if (lhs - cut.rhs.ToDouble() <= kSeparationTolerance) continue;
        CutKey key = KeyOf(cut);
        if (pool != nullptr && pool->count(key)) continue;
        if (!seen.insert(std::move(key)).second) continue;
        cut.efficacy = Efficacy(cut.coefficients, cut.rhs, x.values());
        out.push_back(std::move(cut));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const InstanceCut& a, const InstanceCut& b) {
                     return a.efficacy > b.efficacy;
                   });
  return out;
}

struct Node {
  int64_t id;
  double bound;
  std::vector<double> lo, hi;
  LpBasis basis;
  // Pool indices of the cut rows the basis slacks refer to.
  std::vector<int> basis_cuts;
};

// Pool cuts live in the LP only while active. A cut leaves the LP after
// kMaxIdle consecutive node solves with positive slack and returns as soon
// as an LP point violates it.
constexpr int kMaxIdle = 5;
constexpr double kPoolViolation = 1e-6;

struct PooledCut {
  std::vector<double> row;
  std::vector<std::pair<int, double>> nonzeros;
  double rhs;
  bool active = false;
  int idle = 0;
};

struct BestBoundOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.id > b.id;
  }
};

}  // namespace

const char* LiftingModeName(LiftingMode mode) {
  switch (mode) {
    case LiftingMode::kNone: return "none";
    case LiftingMode::kPc: return "pc";
    case LiftingMode::kGns: return "gns";
    case LiftingMode::kSmart: return "smart";
  }
  return "?";
}

std::optional<LiftingMode> ParseLiftingMode(std::string_view name) {
  for (LiftingMode m : {LiftingMode::kNone, LiftingMode::kPc, LiftingMode::kGns,
                        LiftingMode::kSmart}) {
    if (name == LiftingModeName(m)) return m;
  }
  return std::nullopt;
}

const char* BncStatusName(BncStatus status) {
  switch (status) {
    case BncStatus::kOptimal: return "optimal";
    case BncStatus::kInfeasible: return "infeasible";
    case BncStatus::kStopped: return "stopped";
  }
  return "?";
}

std::string BncConfig::Fingerprint() const {
  std::ostringstream out;
  out << "lift=" << LiftingModeName(lifting) << ";covers=";
  for (size_t i = 0; i < cover_methods.size(); ++i) {
    out << (i ? "+" : "") << CoverMethodName(cover_methods[i]);
  }
  out << ";l=" << per_node_cut_limit;
  if (total_cut_limit) out << ";total=" << *total_cut_limit;
  out << ";select="
      << (node_selection == NodeSelection::kBestBound ? "best-bound" : "dfs");
  if (node_limit) out << ";nodes=" << *node_limit;
  if (std::isfinite(time_limit)) out << ";time=" << time_limit;
  return out.str();
}

LpModel RelaxationModel(const IpInstance& instance) {
  LpModel model;
  for (int64_t c : instance.objective) {
    model.objective.push_back(static_cast<double>(c));
  }
  for (const LinearRow& r : instance.rows) {
    std::vector<double> row;
    for (int64_t a : r.coefficients) row.push_back(static_cast<double>(a));
    model.AddRow(std::move(row), static_cast<double>(r.rhs));
  }
  for (int v : instance.LowerBounds()) model.lo.push_back(v);
  for (int v : instance.UpperBounds()) model.hi.push_back(v);
  return model;
}

namespace {

const NormalizedRow& CheckedRow(const IpInstance& instance, int row) {
  if (row < 0 || row >= instance.m()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(row) + " out of range [0, " +
                    std::to_string(instance.m()) + ")");
  }
  const NormalizedRow& nr = instance.normalized[row];
  if (!nr.row) {
    throw Error(ErrorCode::kInvalidArgument,
                "row " + std::to_string(row) +
                    " has no free variables after normalization");
  }
  return nr;
}

}  // namespace

LpPoint RowPoint(const IpInstance& instance, int row, const LpPoint& x) {
  const NormalizedRow& nr = CheckedRow(instance, row);
  if (x.size() != instance.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP point has " + std::to_string(x.size()) +
                    " entries, instance has " + std::to_string(instance.n()) +
                    " variables");
  }
  std::vector<double> y(nr.variables.size());
  for (size_t k = 0; k < y.size(); ++k) {
    const int v = nr.variables[k];
    y[k] = nr.complemented[v] ? 1.0 - x[v] : x[v];
  }
  return LpPoint(std::move(y));
}

std::vector<int64_t> RowObjective(const IpInstance& instance, int row) {
  const NormalizedRow& nr = CheckedRow(instance, row);
  std::vector<int64_t> c(nr.variables.size());
  for (size_t k = 0; k < c.size(); ++k) {
    const int v = nr.variables[k];
    c[k] = nr.complemented[v] ? -instance.objective[v] : instance.objective[v];
  }
  return c;
}

InstanceCut ToInstanceCut(const IpInstance& instance, int row,
                          LiftedCut lifted) {
  const NormalizedRow& nr = CheckedRow(instance, row);
  if (lifted.coefficients.size() != nr.variables.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cut does not match the row's item count");
  }
  InstanceCut cut;
  cut.coefficients.assign(instance.n(), Rational(0));
  cut.rhs = lifted.rhs;
  for (size_t k = 0; k < nr.variables.size(); ++k) {
    const Rational& alpha = lifted.coefficients[k];
    if (alpha.IsZero()) continue;
    const int v = nr.variables[k];
    if (nr.complemented[v]) {
      cut.coefficients[v] -= alpha;
      cut.rhs -= alpha;
    } else {
      cut.coefficients[v] += alpha;
    }
  }
  cut.source_row = row;
  cut.lifted = std::move(lifted);
  return cut;
}

double Efficacy(std::span<const Rational> coefficients, const Rational& rhs,
                std::span<const double> x) {
  if (coefficients.size() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cut and point dimensions differ");
  }
  double dot = 0, norm2 = 0;
  for (size_t j = 0; j < x.size(); ++j) {
    const double a = coefficients[j].ToDouble();
    dot += a * x[j];
    norm2 += a * a;
  }
  if (norm2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cut has no nonzero coefficient");
  }
  return (dot - rhs.ToDouble()) / std::sqrt(norm2);
}

double Efficacy(const LiftedCut& cut, const LpPoint& x) {
  return Efficacy(cut.coefficients, cut.rhs, x.values());
}

std::vector<InstanceCut> SeparatingCuts(const IpInstance& instance,
                                        const LpPoint& x,
                                        const BncConfig& config) {
  return Separate(instance, x, config, nullptr);
}

std::vector<InstanceCut> NodeCutRound(const IpInstance& instance,
                                      const LpPoint& x,
                                      const BncConfig& config) {
  if (config.per_node_cut_limit < 0) {
    throw Error(ErrorCode::kInvalidArgument, "per-node cut limit must be >= 0");
  }
  std::vector<InstanceCut> cuts = Separate(instance, x, config, nullptr);
  if (static_cast<int>(cuts.size()) > config.per_node_cut_limit) {
    cuts.resize(config.per_node_cut_limit);
  }
  return cuts;
}

BncResult Solve(const IpInstance& instance, const BncConfig& config) {
  if (config.per_node_cut_limit < 0) {
    throw Error(ErrorCode::kInvalidArgument, "per-node cut limit must be >= 0");
  }
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  const int n = instance.n();
  BncResult result;
  BncStats& stats = result.stats;

  LpModel model = RelaxationModel(instance);
  Node root{0, std::numeric_limits<double>::infinity(), model.lo, model.hi, {}, {}};
  const int base_rows = model.num_rows();

  std::priority_queue<Node, std::vector<Node>, BestBoundOrder> best_first;
  std::vector<Node> stack;
  auto push = [&](Node node) {
    if (config.node_selection == NodeSelection::kBestBound) {
      best_first.push(std::move(node));
    } else {
      stack.push_back(std::move(node));
    }
  };
  auto pop = [&] {
    Node node;
    if (config.node_selection == NodeSelection::kBestBound) {
      node = best_first.top();
      best_first.pop();
    } else {
      node = std::move(stack.back());
      stack.pop_back();
    }
    return node;
  };
  auto empty = [&] {
    return config.node_selection == NodeSelection::kBestBound
               ? best_first.empty()
               : stack.empty();
  };
  push(std::move(root));

  CutKeySet pool;
  std::vector<PooledCut> pooled;
  std::vector<int> active;  // sorted; model rows base_rows.. in this order
  auto sync_rows = [&] {
    model.rows.resize(base_rows);
    model.rhs.resize(base_rows);
    for (int id : active) {
      model.rows.push_back(pooled[id].row);
      model.rhs.push_back(pooled[id].rhs);
    }
  };
  auto remap = [&](const LpBasis& basis, const std::vector<int>& ids) {
    if (static_cast<int>(basis.slack.size()) <= base_rows) return basis;
    LpBasis out;
    out.structural = basis.structural;
    out.slack.assign(basis.slack.begin(), basis.slack.begin() + base_rows);
    out.slack.resize(base_rows + active.size(), VarStatus::kBasic);
    size_t k = 0;
    for (size_t a = 0; a < active.size(); ++a) {
      while (k < ids.size() && ids[k] < active[a]) ++k;
      if (k < ids.size() && ids[k] == active[a] &&
          base_rows + k < basis.slack.size()) {
        out.slack[base_rows + a] = basis.slack[base_rows + k];
      }
    }
    return out;
  };
  // Solves the node LP, pulling in pool cuts until none is violated, so the
  // bound equals the LP over the whole pool.
  auto solve_lp = [&](const LpBasis& warm, const std::vector<int>& warm_ids) {
    LpBasis start = remap(warm, warm_ids);
    LpSolution lp = SolveLp(model, &start);
    stats.lp_iterations += lp.iterations;
    while (lp.status == LpStatus::kOptimal) {
      std::vector<int> violated;
      for (int id = 0; id < static_cast<int>(pooled.size()); ++id) {
        const PooledCut& c = pooled[id];
        if (c.active) continue;
        double dot = 0;
        for (const auto& [j, a] : c.nonzeros) dot += a * lp.x[j];
        if (dot > c.rhs + kPoolViolation) violated.push_back(id);
      }
      if (violated.empty()) break;
      const std::vector<int> solved = active;
      for (int id : violated) {
        pooled[id].active = true;
        pooled[id].idle = 0;
      }
      std::vector<int> merged;
      std::merge(active.begin(), active.end(), violated.begin(), violated.end(),
                 std::back_inserter(merged));
      active = std::move(merged);
      sync_rows();
      start = remap(lp.basis, solved);
      lp = SolveLp(model, &start);
      stats.lp_iterations += lp.iterations;
    }
    return lp;
  };
  // Ages the active cuts against the final node LP and drops idle ones.
  auto age_cuts = [&](const LpSolution& lp) {
    bool dropped = false;
    for (int id : active) {
      PooledCut& c = pooled[id];
      double dot = 0;
      for (const auto& [j, a] : c.nonzeros) dot += a * lp.x[j];
      c.idle = dot < c.rhs - kPoolViolation ? c.idle + 1 : 0;
      if (c.idle >= kMaxIdle) {
        c.active = false;
        dropped = true;
      }
    }
    if (!dropped) return;
    std::erase_if(active, [&](int id) { return !pooled[id].active; });
    sync_rows();
  };
  int64_t next_id = 1;
  bool stopped = false;
  auto prunable = [&](double bound) {
    return stats.incumbent &&
           bound < static_cast<double>(*stats.incumbent) + 1.0 - 1e-6;
  };

  while (!empty()) {
    if (elapsed() >= config.time_limit ||
        (config.node_limit && stats.tree_size >= *config.node_limit)) {
      stopped = true;
      break;
    }
    Node node = pop();
    if (prunable(node.bound)) continue;
    ++stats.tree_size;
    model.lo = node.lo;
    model.hi = node.hi;
    LpSolution lp = solve_lp(node.basis, node.basis_cuts);
    if (lp.status == LpStatus::kInfeasible) continue;
    if (node.id == 0) stats.root_bound = lp.objective;

    auto fractional = [&](const LpSolution& s) {
      int best = -1;
      double best_frac = config.integrality_tolerance;
      for (int j = 0; j < n; ++j) {
        const double f = std::min(s.x[j] - std::floor(s.x[j]),
                                  std::ceil(s.x[j]) - s.x[j]);
        if (f > best_frac) {
          best_frac = f;
          best = j;
        }
      }
      return best;
    };

    int branch_var = fractional(lp);
    const bool cuts_left =
        !config.total_cut_limit || stats.cuts_added < *config.total_cut_limit;
    if (branch_var >= 0 && !prunable(lp.objective) &&
        config.lifting != LiftingMode::kNone && cuts_left &&
        config.per_node_cut_limit > 0) {
      std::vector<InstanceCut> cuts =
          Separate(instance, LpPoint(lp.x), config, &pool);
      stats.cuts_generated += static_cast<int64_t>(cuts.size());
      int64_t take = std::min<int64_t>(config.per_node_cut_limit,
                                       static_cast<int64_t>(cuts.size()));
      if (config.total_cut_limit) {
        take = std::min(take, *config.total_cut_limit - stats.cuts_added);
      }
      for (int64_t i = 0; i < take; ++i) {
        InstanceCut& cut = cuts[i];
        pool.insert(KeyOf(cut));
        PooledCut pc;
        for (const Rational& a : cut.coefficients) {
          if (!a.IsZero()) {
            pc.nonzeros.emplace_back(static_cast<int>(pc.row.size()), a.ToDouble());
          }
          pc.row.push_back(a.ToDouble());
        }
        pc.rhs = cut.rhs.ToDouble();
        pc.active = true;
        active.push_back(static_cast<int>(pooled.size()));
        pooled.push_back(std::move(pc));
        if (config.cut_observer) {
          config.cut_observer(*instance.normalized[cut.source_row].row,
                              cut.lifted);
        }
      }
      stats.cuts_added += take;
      if (take > 0) {
        const std::vector<int> solved(active.begin(), active.end() - take);
        sync_rows();
        lp = solve_lp(lp.basis, solved);
        if (lp.status == LpStatus::kInfeasible) continue;
        branch_var = fractional(lp);
      }
      if (node.id == 0) stats.root_bound_after_cuts = lp.objective;
    }
    const std::vector<int> solved_cuts = active;
    age_cuts(lp);
    if (prunable(lp.objective)) continue;

    if (branch_var < 0) {
      std::vector<int> x(n);
      for (int j = 0; j < n; ++j) x[j] = static_cast<int>(std::lround(lp.x[j]));
      if (!instance.IsFeasible(x)) {
        throw Error(ErrorCode::kNumericalFailure,
                    "integral LP solution violates a row");
      }
      const int64_t value = instance.Value(x);
      if (!stats.incumbent || value > *stats.incumbent) {
        stats.incumbent = value;
        result.x = std::move(x);
      }
      continue;
    }

    Node down{next_id++, lp.objective, node.lo, node.hi, lp.basis, solved_cuts};
    down.hi[branch_var] = 0;
    Node up{next_id++,          lp.objective,       std::move(node.lo),
            std::move(node.hi), std::move(lp.basis), solved_cuts};
    up.lo[branch_var] = 1;
    push(std::move(down));
    push(std::move(up));
  }

  stats.wall_time = elapsed();
  stats.proven_optimal = !stopped;
  result.optimum = stats.incumbent;
  if (stopped) {
    result.status = BncStatus::kStopped;
  } else {
    result.status =
        stats.incumbent ? BncStatus::kOptimal : BncStatus::kInfeasible;
  }
  return result;
}

}  // namespace liftcover
