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

#include "locc/weight_vector.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "locc/errors.hpp"

namespace locc {

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw ValidationError("weight vector must have at least one entry");
    }
    for (const Rational& w : entries_) {
        if (w.is_negative()) {
            throw ValidationError("weight vector entries must be nonnegative");
        }
    }
    if (sum(entries_) != Rational(1)) {
        throw ValidationError("weight vector entries must sum to exactly 1");
    }
}

SortedWeights sort_descending(const WeightVector& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });

    std::vector<Rational> sorted;
    sorted.reserve(v.size());
    for (std::size_t i : order) {
        sorted.push_back(v[i]);
    }
    return SortedWeights{WeightVector(std::move(sorted)), Permutation(std::move(order))};
}

WeightVector permute(const WeightVector& v, const Permutation& sigma) {
    return WeightVector(permute(v.entries(), sigma));
}

}  // namespace locc
