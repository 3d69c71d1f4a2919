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

#include "locc/random_instance.hpp"

#include <numeric>

#include "locc/errors.hpp"

namespace locc {

namespace {

constexpr long kWeightScale = 1000;

std::vector<Rational> random_positive_weights(std::size_t n, SplitMix64& rng) {
    std::vector<long> draws(n);
    long total = 0;
    for (long& d : draws) {
        d = static_cast<long>(rng.below(kWeightScale)) + 1;
        total += d;
    }
    std::vector<Rational> weights;
    weights.reserve(n);
    for (long d : draws) {
        weights.emplace_back(d, total);
    }
    return weights;
}

}  // namespace

Permutation random_permutation(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(images[i - 1], images[rng.below(i)]);
    }
    return Permutation(std::move(images));
}

WeightVector random_weight_vector(std::size_t n, SplitMix64& rng) {
    return WeightVector(random_positive_weights(n, rng));
}

BistochasticMatrix random_bistochastic(std::size_t n, SplitMix64& rng) {
    const std::size_t term_count = rng.below(n) + 1;
    const std::vector<Rational> weights = random_positive_weights(term_count, rng);
    RationalMatrix m(n);
    for (std::size_t t = 0; t < term_count; ++t) {
        const Permutation sigma = random_permutation(n, rng);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(sigma(j), j) += weights[t];
        }
    }
    return BistochasticMatrix(std::move(m));
}

RandomInstance random_majorizing_pair(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw ValidationError("instance size must be at least 1");
    }
    SplitMix64 rng(seed);
    WeightVector beta = random_weight_vector(n, rng);
    const BistochasticMatrix d = random_bistochastic(n, rng);
    WeightVector alpha = d.apply(beta);
    return RandomInstance{std::move(alpha), std::move(beta)};
}

}  // namespace locc
