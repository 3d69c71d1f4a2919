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

#include "locc/matrix.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

/// One mixing step of the transfer construction, acting in the
/// descending-sorted frame: its matrix is t*I + (1-t)*Q_{jk} with Q_{jk}
/// the transposition of coordinates j < k. Doubly stochastic for t in [0,1].
struct TTransform {
    std::size_t j;  // 0-based, j < k
    std::size_t k;
    Rational t;

    RationalMatrix matrix(std::size_t n) const;
};

/// Constructs a doubly stochastic D with D * beta == alpha, which exists iff
/// beta majorizes alpha (throws NotMajorized otherwise).
///
/// Both vectors are sorted descending; while the sorted source y differs from
/// the sorted target x, the smallest index j with y[j] > x[j] is mixed with
/// the smallest index k > j with y[k] < x[k], transferring
/// delta = min(y[j]-x[j], x[k]-y[k]) from j to k. Each step fixes at least
/// one more coordinate, so at most N-1 steps run. The sorting permutations
/// are undone at the end so that D acts on the original coordinates.
///
/// Index choices are fixed (smallest j, then smallest k) so the result is
/// deterministic. If `chain` is non-null the applied TTransforms are
/// recorded there in order.
BistochasticMatrix build_transfer_matrix(const WeightVector& beta, const WeightVector& alpha,
                                         std::vector<TTransform>* chain = nullptr);

/// True iff d is doubly stochastic and d * beta == alpha, all exact.
bool validate_transfer(const RationalMatrix& d, const WeightVector& beta,
                       const WeightVector& alpha);

}  // namespace locc
