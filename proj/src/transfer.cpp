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

#include "locc/transfer.hpp"

#include <cassert>

#include "locc/errors.hpp"
#include "locc/majorization.hpp"

namespace locc {

RationalMatrix TTransform::matrix(std::size_t n) const {
    RationalMatrix m = RationalMatrix::identity(n);
    const Rational one_minus_t = Rational(1) - t;
    m.at(j, j) = t;
    m.at(k, k) = t;
    m.at(j, k) = one_minus_t;
    m.at(k, j) = one_minus_t;
    return m;
}

BistochasticMatrix build_transfer_matrix(const WeightVector& beta, const WeightVector& alpha,
                                         std::vector<TTransform>* chain) {
    if (!majorizes(beta, alpha)) {
        throw NotMajorized("target weights do not majorize the source weights");
    }
    const std::size_t n = beta.size();

    const SortedWeights target = sort_descending(alpha);
    const SortedWeights source = sort_descending(beta);
    const std::vector<Rational>& x = target.sorted.entries();
    std::vector<Rational> y = source.sorted.entries();

    RationalMatrix d = RationalMatrix::identity(n);
    std::size_t steps = 0;
    while (y != x) {
        if (++steps > n) {
            throw Error("transfer construction failed to converge");
        }
        std::size_t j = 0;
        while (j < n && y[j] <= x[j]) {
            ++j;
        }
        std::size_t k = j + 1;
        while (k < n && y[k] >= x[k]) {
            ++k;
        }
        assert(j < n && k < n);

        const Rational delta = min(y[j] - x[j], x[k] - y[k]);
        const Rational t = Rational(1) - delta / (y[j] - y[k]);
        if (chain != nullptr) {
            chain->push_back(TTransform{j, k, t});
        }

        // Left-multiplying by t*I + (1-t)*Q_{jk} only mixes rows j and k.
        const Rational one_minus_t = Rational(1) - t;
        for (std::size_t c = 0; c < n; ++c) {
            const Rational dj = d.at(j, c);
            const Rational dk = d.at(k, c);
            d.at(j, c) = t * dj + one_minus_t * dk;
            d.at(k, c) = one_minus_t * dj + t * dk;
        }
        y[j] -= delta;
        y[k] += delta;
    }
    assert(steps <= (n == 0 ? 0 : n - 1));

    // d maps sorted beta to sorted alpha; conjugate by the sorting
    // permutations so the result maps beta to alpha in original coordinates.
    const Permutation target_inv = target.order.inverse();
    const Permutation source_inv = source.order.inverse();
    RationalMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.at(i, j) = d.at(target_inv(i), source_inv(j));
        }
    }
    assert(out.apply(beta.entries()) == alpha.entries());
    return BistochasticMatrix(std::move(out));
}

bool validate_transfer(const RationalMatrix& d, const WeightVector& beta,
                       const WeightVector& alpha) {
    if (d.size() != beta.size() || beta.size() != alpha.size()) {
        throw DimensionMismatch("transfer validation requires matching dimensions");
    }
    return d.is_doubly_stochastic() && d.apply(beta.entries()) == alpha.entries();
}

}  // namespace locc
