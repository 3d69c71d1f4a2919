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

#include "locc/rational.hpp"

#include <algorithm>
#include <ostream>

#include "locc/errors.hpp"

namespace locc {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

ParseError bad_rational(std::string_view text) {
    return ParseError("invalid rational literal: \"" + std::string(text) + "\"");
}

mpz_class integer_from_digits(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw ValidationError("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) {
        throw ValidationError("rational division by zero");
    }
    return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) {
        throw bad_rational(text);
    }

    mpz_class num;
    mpz_class den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const std::string_view num_part = body.substr(0, slash);
        const std::string_view den_part = body.substr(slash + 1);
        if (!all_digits(num_part) || !all_digits(den_part)) {
            throw bad_rational(text);
        }
        num = integer_from_digits(num_part);
        den = integer_from_digits(den_part);
        if (den == 0) {
            throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
        }
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = body.substr(0, dot);
        const std::string_view frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw bad_rational(text);
        }
        if ((!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw bad_rational(text);
        }
        std::string digits(int_part);
        digits.append(frac_part);
        num = integer_from_digits(digits);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    } else {
        if (!all_digits(body)) {
            throw bad_rational(text);
        }
        num = integer_from_digits(body);
        den = 1;
    }

    if (negative) {
        num = -num;
    }
    mpq_class value(num, den);
    value.canonicalize();
    return Rational(std::move(value));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const { return value_.get_d(); }

Rational sum(std::span<const Rational> values) {
    Rational total;
    for (const Rational& v : values) {
        total += v;
    }
    return total;
}

std::ostream& operator<<(std::ostream& out, const Rational& q) { return out << q.to_string(); }

}  // namespace locc
