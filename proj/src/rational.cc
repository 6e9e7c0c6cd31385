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

#include "liftcover/rational.h"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "liftcover/error.h"

namespace liftcover {
namespace {

__int128 Gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(__int128 v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kNotMinimal: return "NotMinimal";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInfeasibleRow: return "InfeasibleRow";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  *this = FromWide(num, den);
}

Rational Rational::FromWide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw Error(ErrorCode::kOverflow, "rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(num == 0 ? 1 : den);
  return r;
}

int64_t Rational::Floor() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

int64_t Rational::Ceil() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator-() const {
  return FromWide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    *this = FromWide(static_cast<__int128>(num_) + o.num_, den_);
  } else {
    *this = FromWide(static_cast<__int128>(num_) * o.den_ +
                         static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.num_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  *this = FromWide(static_cast<__int128>(num_) * o.den_,
                   static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::kParseError,
                 "not a rational number: '" + std::string(text) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw fail();

  auto parse_int = [&](std::string_view s, bool allow_sign) -> __int128 {
    bool negative = false;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw fail();
    __int128 v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      v = v * 10 + (c - '0');
      if (v > std::numeric_limits<int64_t>::max()) throw fail();
    }
    return negative ? -v : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    __int128 num = parse_int(text.substr(0, slash), true);
    __int128 den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw fail();
    return FromWide(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+'))
      whole.remove_prefix(1);
    if (frac.size() > 18 || (whole.empty() && frac.empty())) throw fail();
    __int128 w = whole.empty() ? 0 : parse_int(whole, false);
    __int128 f = frac.empty() ? 0 : parse_int(frac, false);
    __int128 scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    __int128 num = w * scale + f;
    return FromWide(negative ? -num : num, scale);
  }
  return FromWide(parse_int(text, true), 1);
}

Rational Rational::FromDouble(double value, int64_t denominator) {
  if (!std::isfinite(value) || denominator <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot convert to rational");
  }
  double scaled = std::round(value * static_cast<double>(denominator));
  if (std::fabs(scaled) > 9.0e18) {
    throw Error(ErrorCode::kOverflow, "value too large for rational");
  }
  return Rational(static_cast<int64_t>(scaled), denominator);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Abs(const Rational& r) { return r.Sign() < 0 ? -r : r; }

int64_t Lcm(int64_t a, int64_t b) {
  __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l < 0) l = -l;
  if (!FitsInt64(l)) throw Error(ErrorCode::kOverflow, "lcm overflow");
  return static_cast<int64_t>(l);
}

}  // namespace liftcover
