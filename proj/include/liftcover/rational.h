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

#ifndef LIFTCOVER_RATIONAL_H_
#define LIFTCOVER_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace liftcover {

// Exact rational number over 64-bit integers, always kept in lowest terms
// with a positive denominator. Intermediate products are formed in 128 bits;
// a result that does not fit in 64 bits throws Error(kOverflow).
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool IsInteger() const { return den_ == 1; }
  bool IsZero() const { return num_ == 0; }
  int Sign() const { return (num_ > 0) - (num_ < 0); }

  // Largest integer <= *this / smallest integer >= *this.
  int64_t Floor() const;
  int64_t Ceil() const;
  double ToDouble() const { return static_cast<double>(num_) / den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p/q", or "p" when integral.
  std::string ToString() const;

  // Parses "p", "p/q", or a finite decimal such as "-0.125" exactly.
  static Rational Parse(std::string_view text);

  // Nearest rational with the given denominator (ties away from zero).
  static Rational FromDouble(double value, int64_t denominator);

 private:
  static Rational FromWide(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Abs(const Rational& r);
int64_t Lcm(int64_t a, int64_t b);

}  // namespace liftcover

template <>
struct std::hash<liftcover::Rational> {
  size_t operator()(const liftcover::Rational& r) const noexcept {
    size_t h = std::hash<int64_t>()(r.num());
    return h ^ (std::hash<int64_t>()(r.den()) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

#endif  // LIFTCOVER_RATIONAL_H_
