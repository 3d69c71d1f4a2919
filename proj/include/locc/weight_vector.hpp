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

#include <vector>

#include "locc/permutation.hpp"
#include "locc/rational.hpp"

namespace locc {

/// Probability vector of exact rationals: nonnegative entries summing to
/// exactly one. Holds the squared Schmidt coefficients of a bipartite pure
/// state, equivalently the eigenvalues of either reduced density matrix.
class WeightVector {
  public:
    explicit WeightVector(std::vector<Rational> entries);

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const WeightVector&) const = default;

  private:
    std::vector<Rational> entries_;
};

struct SortedWeights {
    WeightVector sorted;  // sorted[i] = source[order(i)], non-increasing
    Permutation order;    // ties keep the smaller original index first
};

/// Stable descending sort, returned together with the sorting permutation.
SortedWeights sort_descending(const WeightVector& v);

/// Right action on a weight vector: result[i] = v[sigma(i)].
WeightVector permute(const WeightVector& v, const Permutation& sigma);

}  // namespace locc
