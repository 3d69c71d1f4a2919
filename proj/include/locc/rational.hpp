// Copyright 2026 The loccsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locc {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds. Backed by GMP.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
    Rational(long numerator, long denominator);

    /// Accepts "num/den", a plain integer, or a decimal literal such as
    /// "0.35" (converted exactly, never through binary floating point).
    static Rational parse(std::string_view text);

    /// Renders as "num/den" in lowest terms, e.g. "3/5", "1/1", "-7/20".
    std::string to_string() const;

    /// Nearest double; the only lossy operation on this type.
    double to_double() const;

    int sign() const { return mpq_sgn(value_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_negative() const { return sign() < 0; }
    bool is_positive() const { return sign() > 0; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;  // canonical: lowest terms, denominator > 0
};

Rational sum(std::span<const Rational> values);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

std::ostream& operator<<(std::ostream& out, const Rational& q);

}  // namespace locc
