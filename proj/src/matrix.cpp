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

#include "locc/matrix.hpp"

#include <utility>

#include "locc/errors.hpp"

namespace locc {

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) {
        throw ValidationError("matrix must have at least one row");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
    }
    return m;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != n_) {
        throw DimensionMismatch("matrix-vector dimension mismatch");
    }
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (o.n_ != n_) {
        throw DimensionMismatch("matrix-matrix dimension mismatch");
    }
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const Rational& left = at(i, k);
            if (left.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n_; ++j) {
                out.at(i, j) += left * o.at(k, j);
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out.at(j, i) = at(i, j);
        }
    }
    return out;
}

Rational RationalMatrix::row_sum(std::size_t row) const {
    Rational total;
    for (std::size_t j = 0; j < n_; ++j) {
        total += at(row, j);
    }
    return total;
}

Rational RationalMatrix::column_sum(std::size_t col) const {
    Rational total;
    for (std::size_t i = 0; i < n_; ++i) {
        total += at(i, col);
    }
    return total;
}

bool RationalMatrix::is_nonnegative() const {
    for (const Rational& e : entries_) {
        if (e.is_negative()) {
            return false;
        }
    }
    return true;
}

bool RationalMatrix::is_doubly_stochastic() const {
    if (!is_nonnegative()) {
        return false;
    }
    const Rational one(1);
    for (std::size_t i = 0; i < n_; ++i) {
        if (row_sum(i) != one || column_sum(i) != one) {
            return false;
        }
    }
    return true;
}

std::size_t RationalMatrix::nonzero_count() const {
    std::size_t count = 0;
    for (const Rational& e : entries_) {
        if (!e.is_zero()) {
            ++count;
        }
    }
    return count;
}

BistochasticMatrix::BistochasticMatrix(RationalMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_doubly_stochastic()) {
        throw ValidationError("matrix is not doubly stochastic");
    }
}

WeightVector BistochasticMatrix::apply(const WeightVector& v) const {
    return WeightVector(matrix_.apply(v.entries()));
}

BistochasticMatrix permutation_matrix(const Permutation& sigma) {
    RationalMatrix m(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        m.at(sigma(j), j) = Rational(1);
    }
    return BistochasticMatrix(std::move(m));
}

}  // namespace locc
