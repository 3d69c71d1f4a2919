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

#include <cstddef>
#include <vector>

#include "locc/permutation.hpp"
#include "locc/rational.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
  public:
    explicit RationalMatrix(std::size_t n);  // zero matrix
    static RationalMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Rational& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
    const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix transposed() const;

    Rational row_sum(std::size_t row) const;
    Rational column_sum(std::size_t col) const;
    bool is_nonnegative() const;
    bool is_doubly_stochastic() const;
    std::size_t nonzero_count() const;

    bool operator==(const RationalMatrix&) const = default;

  private:
    std::size_t n_;
    std::vector<Rational> entries_;
};

/// Doubly stochastic matrix: nonnegative, every row and column sums to
/// exactly one. Validated on construction.
class BistochasticMatrix {
  public:
    explicit BistochasticMatrix(RationalMatrix m);

    std::size_t size() const { return matrix_.size(); }
    const RationalMatrix& matrix() const { return matrix_; }
    const Rational& at(std::size_t row, std::size_t col) const { return matrix_.at(row, col); }

    /// A doubly stochastic matrix maps probability vectors to probability
    /// vectors.
    WeightVector apply(const WeightVector& v) const;

    bool operator==(const BistochasticMatrix&) const = default;

  private:
    RationalMatrix matrix_;
};

/// Matrix of sigma under the fixed convention: entry (i, j) = 1 iff
/// i = sigma(j). It maps the basis vector e_i to e_{sigma(i)}, and
/// permutation_matrix(sigma).apply(v) == permute(v, sigma.inverse()).
BistochasticMatrix permutation_matrix(const Permutation& sigma);

}  // namespace locc
