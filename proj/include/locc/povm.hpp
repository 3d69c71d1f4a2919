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

#include "locc/birkhoff.hpp"
#include "locc/permutation.hpp"
#include "locc/rational.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

/// One measurement operator A_sigma, diagonal in the Schmidt basis, labeled
/// by the decomposition permutation sigma it came from, with outcome weight
/// p. Well-formed elements have nonnegative diagonals and p > 0.
struct PovmElement {
    Permutation sigma;
    std::vector<Rational> diag;
    Rational p;

    bool operator==(const PovmElement&) const = default;
};

/// Builds the measurement from a decomposition of a transfer matrix for
/// (alpha, beta): element sigma has diag[i] = p * beta[sigma^-1(i)] / alpha[i].
///
/// Where alpha[i] = 0 that quotient is undefined; the decomposition then
/// forces beta[sigma^-1(i)] = 0 for every term, and diag[i] is set to p,
/// which keeps the element positive and the family complete while acting
/// only on a coordinate the state never occupies. Throws
/// InconsistentDecomposition if the decomposition does not reproduce alpha
/// from beta coordinate-wise.
std::vector<PovmElement> build_povm(const WeightVector& alpha, const WeightVector& beta,
                                    const BirkhoffDecomposition& dec);

/// True iff every diagonal is nonnegative and the exact sum of the diagonals
/// is the all-ones vector.
bool check_completeness(const std::vector<PovmElement>& elements);

/// Born probability of the outcome: sum of diag[i] * alpha[i]. Equals e.p
/// for elements produced by build_povm.
Rational outcome_probability(const PovmElement& e, const WeightVector& alpha);

/// The vector diag[i] * alpha[i]: the outcome's weights before
/// renormalization.
std::vector<Rational> unnormalized_outcome_weights(const PovmElement& e,
                                                   const WeightVector& alpha);

/// Post-measurement Schmidt weights: unnormalized weights divided by p.
/// For built elements this equals beta permuted by sigma^-1, so permuting
/// the result by sigma recovers beta. Throws NotNormalized if the result
/// does not sum to one (inconsistent inputs).
WeightVector post_measurement_weights(const PovmElement& e, const WeightVector& alpha);

}  // namespace locc
