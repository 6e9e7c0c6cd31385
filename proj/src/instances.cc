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

#include "liftcover/instances.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "liftcover/error.h"

namespace liftcover {
namespace {

int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "row data overflows 64-bit integers");
  }
  return out;
}

int64_t UniformInt(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void ParseFail(int line, int column, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what);
}

struct Token {
  int64_t value;
  int column;
};

std::vector<Token> Tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    const char* first = line.data() + i;
    const char* last = line.data() + j;
    if (*first == '+') ++first;
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) {
      ParseFail(line_no, static_cast<int>(i) + 1, "integer out of range");
    }
    if (ec != std::errc() || ptr != last) {
      ParseFail(line_no, static_cast<int>(i) + 1,
                "expected an integer, found '" +
                    std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back({v, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

NormalizedRow NormalizeRow(std::span<const int64_t> coefficients, int64_t rhs) {
  NormalizedRow out;
  const int n = static_cast<int>(coefficients.size());
  out.complemented.assign(n, false);
  bool any = false;
  for (int j = 0; j < n; ++j) {
    if (coefficients[j] == 0) continue;
    any = true;
    if (coefficients[j] < 0) {
      if (coefficients[j] == INT64_MIN) {
        throw Error(ErrorCode::kOverflow, "coefficient out of range");
      }
      out.complemented[j] = true;
      rhs = CheckedAdd(rhs, -coefficients[j]);
    }
  }
  if (!any) {
    throw Error(ErrorCode::kInvalidArgument, "row has no nonzero coefficient");
  }
  if (rhs < 0) {
    throw Error(ErrorCode::kInfeasibleRow,
                "row is infeasible: normalized right-hand side is " +
                    std::to_string(rhs));
  }
  std::vector<int64_t> weights;
  for (int j = 0; j < n; ++j) {
    if (coefficients[j] == 0) continue;
    const int64_t a = coefficients[j] < 0 ? -coefficients[j] : coefficients[j];
    if (a > rhs) {
      out.fixings.push_back({j, out.complemented[j] ? 1 : 0});
      continue;
    }
    weights.push_back(a);
    out.variables.push_back(j);
  }
  if (!weights.empty()) out.row.emplace(std::move(weights), rhs);
  return out;
}

std::vector<int> IpInstance::LowerBounds() const {
  std::vector<int> lo(n(), 0);
  for (const NormalizedRow& r : normalized) {
    for (const VariableFixing& f : r.fixings) {
      if (f.value == 1) lo[f.variable] = 1;
    }
  }
  return lo;
}

std::vector<int> IpInstance::UpperBounds() const {
  std::vector<int> hi(n(), 1);
  for (const NormalizedRow& r : normalized) {
    for (const VariableFixing& f : r.fixings) {
      if (f.value == 0) hi[f.variable] = 0;
    }
  }
  return hi;
}

int64_t IpInstance::Value(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != n()) {
    throw Error(ErrorCode::kDimensionMismatch, "point has wrong dimension");
  }
  int64_t v = 0;
  for (int j = 0; j < n(); ++j) {
    if (x[j]) v += objective[j];
  }
  return v;
}

bool IpInstance::IsFeasible(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != n()) {
    throw Error(ErrorCode::kDimensionMismatch, "point has wrong dimension");
  }
  for (const LinearRow& r : rows) {
    __int128 lhs = 0;
    for (int j = 0; j < n(); ++j) {
      if (x[j]) lhs += r.coefficients[j];
    }
    if (lhs > r.rhs) return false;
  }
  return true;
}

IpInstance MakeInstance(std::string name, std::vector<int64_t> objective,
                        std::vector<LinearRow> rows) {
  if (objective.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "instance has no variables");
  }
  IpInstance inst;
  inst.name = std::move(name);
  inst.objective = std::move(objective);
  inst.rows = std::move(rows);
  for (size_t i = 0; i < inst.rows.size(); ++i) {
    if (static_cast<int>(inst.rows[i].coefficients.size()) != inst.n()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(inst.rows[i].coefficients.size()) +
                      " coefficients, expected " + std::to_string(inst.n()));
    }
    try {
      inst.normalized.push_back(
          NormalizeRow(inst.rows[i].coefficients, inst.rows[i].rhs));
    } catch (const Error& e) {
      throw Error(e.code(), "row " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return inst;
}

const char* MkpKindName(MkpKind kind) {
  switch (kind) {
    case MkpKind::kUncorrelated: return "uncorrelated";
    case MkpKind::kWeaklyCorrelated: return "weakly-correlated";
  }
  return "?";
}

std::optional<MkpKind> ParseMkpKind(std::string_view name) {
  if (name == "uncorrelated") return MkpKind::kUncorrelated;
  if (name == "weakly-correlated") return MkpKind::kWeaklyCorrelated;
  return std::nullopt;
}

IpInstance GenMkp(MkpKind kind, int n, int m, uint64_t seed) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and m >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<LinearRow> rows(m);
  for (LinearRow& r : rows) {
    int64_t total = 0;
    r.coefficients.resize(n);
    for (int64_t& a : r.coefficients) {
      a = UniformInt(rng, 10, 1000);
      total += a;
    }
    r.rhs = total / 2;
  }
  std::vector<int64_t> c(n);
  for (int j = 0; j < n; ++j) {
    if (kind == MkpKind::kUncorrelated) {
      c[j] = UniformInt(rng, 10, 1000);
    } else {
      double mean = 0;
      for (const LinearRow& r : rows) mean += r.coefficients[j];
      const int64_t base = std::llround(mean / m);
      c[j] = std::max<int64_t>(1, base + UniformInt(rng, -100, 100));
    }
  }
  std::string name = std::string(kind == MkpKind::kUncorrelated ? "uc" : "wc") +
                     "-n" + std::to_string(n) + "-m" + std::to_string(m) +
                     "-s" + std::to_string(seed);
  IpInstance inst = MakeInstance(std::move(name), std::move(c), std::move(rows));
  inst.kind = MkpKindName(kind);
  inst.seed = seed;
  return inst;
}

IpInstance GenChvatal(int n, uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1");
  std::mt19937_64 rng(seed);
  LinearRow row;
  row.coefficients.resize(n);
  int64_t total = 0;
  for (int64_t& a : row.coefficients) {
    a = UniformInt(rng, 1, 10000);
    total += a;
  }
  row.rhs = total / 2;
  std::vector<int64_t> c = row.coefficients;
  IpInstance inst =
      MakeInstance("chvatal-n" + std::to_string(n) + "-s" + std::to_string(seed),
                   std::move(c), {std::move(row)});
  inst.kind = "chvatal";
  inst.seed = seed;
  return inst;
}

IpInstance ParseInstance(std::string_view text) {
  std::string name, kind;
  std::optional<uint64_t> seed;
  std::vector<std::pair<int, std::vector<Token>>> lines;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string comment = Trim(line.substr(hash + 1));
      size_t colon = comment.find(':');
      if (colon != std::string::npos) {
        std::string key = Trim(comment.substr(0, colon));
        std::string value = Trim(std::string_view(comment).substr(colon + 1));
        if (key == "name") {
          name = value;
        } else if (key == "kind") {
          kind = value;
        } else if (key == "seed") {
          uint64_t s = 0;
          auto [ptr, ec] =
              std::from_chars(value.data(), value.data() + value.size(), s);
          if (ec != std::errc() || ptr != value.data() + value.size()) {
            ParseFail(line_no, static_cast<int>(hash) + 1,
                      "seed must be a non-negative integer");
          }
          seed = s;
        }
      }
      line = line.substr(0, hash);
    }
    std::vector<Token> tokens = Tokenize(line, line_no);
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    if (end == text.size()) break;
  }

  if (lines.empty()) ParseFail(line_no, 1, "missing header line 'n m'");
  const auto& [header_line, header] = lines[0];
  if (header.size() != 2) {
    ParseFail(header_line, 1, "header must be 'n m'");
  }
  if (header[0].value < 1 || header[0].value > 1000000) {
    ParseFail(header_line, header[0].column, "n must be in [1, 1000000]");
  }
  if (header[1].value < 0 || header[1].value > 1000000) {
    ParseFail(header_line, header[1].column, "m must be in [0, 1000000]");
  }
  const int n = static_cast<int>(header[0].value);
  const int m = static_cast<int>(header[1].value);
  if (static_cast<int>(lines.size()) < m + 2) {
    ParseFail(line_no, 1,
              "expected " + std::to_string(m + 2) + " data lines, found " +
                  std::to_string(lines.size()));
  }
  if (static_cast<int>(lines.size()) > m + 2) {
    ParseFail(lines[m + 2].first, 1, "unexpected data after the last row");
  }
  auto expect = [](const std::pair<int, std::vector<Token>>& l, size_t count,
                   const std::string& what) {
    if (l.second.size() != count) {
      const int col = l.second.size() > count ? l.second[count].column : 1;
      ParseFail(l.first, col,
                what + " needs " + std::to_string(count) + " integers, found " +
                    std::to_string(l.second.size()));
    }
  };
  expect(lines[1], n, "objective");
  std::vector<int64_t> c;
  for (const Token& t : lines[1].second) c.push_back(t.value);
  std::vector<LinearRow> rows;
  for (int i = 0; i < m; ++i) {
    const auto& l = lines[i + 2];
    expect(l, n + 1, "row " + std::to_string(i + 1));
    LinearRow r;
    for (int j = 0; j < n; ++j) r.coefficients.push_back(l.second[j].value);
    r.rhs = l.second[n].value;
    rows.push_back(std::move(r));
  }
  IpInstance inst;
  try {
    inst = MakeInstance(std::move(name), std::move(c), std::move(rows));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(e.code(), std::string("invalid instance: ") + e.what());
  }
  inst.kind = std::move(kind);
  inst.seed = seed;
  return inst;
}

std::string FormatInstance(const IpInstance& instance) {
  std::ostringstream out;
  if (!instance.name.empty()) out << "# name: " << instance.name << "\n";
  if (!instance.kind.empty()) out << "# kind: " << instance.kind << "\n";
  if (instance.seed) out << "# seed: " << *instance.seed << "\n";
  out << instance.n() << " " << instance.m() << "\n";
  for (int j = 0; j < instance.n(); ++j) {
    out << (j ? " " : "") << instance.objective[j];
  }
  out << "\n";
  for (const LinearRow& r : instance.rows) {
    for (int64_t a : r.coefficients) out << a << " ";
    out << r.rhs << "\n";
  }
  return out.str();
}

IpInstance ReadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    IpInstance inst = ParseInstance(buffer.str());
    return inst;
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void WriteInstance(const IpInstance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << FormatInstance(instance);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace liftcover
