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

#include <string>
#include <string_view>
#include <vector>

#include "locc/birkhoff.hpp"
#include "locc/matrix.hpp"
#include "locc/povm.hpp"
#include "locc/transfer.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

/// The complete conversion plan from the state with weights alpha to the
/// state with weights beta: transfer matrix, its decomposition, the
/// measurement elements, and implicitly the per-outcome correction — after
/// outcome sigma both parties relabel basis state sigma(i) as i.
///
/// The transfer matrix is stored raw so that deserialized protocols can be
/// re-verified; verify_protocol checks every invariant.
struct Protocol {
    WeightVector alpha;
    WeightVector beta;
    RationalMatrix transfer;
    BirkhoffDecomposition decomposition;
    std::vector<PovmElement> elements;

    bool operator==(const Protocol&) const = default;
};

/// Diagnostic trail of plan(): the TTransform chain behind the transfer
/// matrix. The peel order is the decomposition's own term order.
struct PlanTrace {
    std::vector<TTransform> transfer_chain;
};

/// Full pipeline: transfer matrix, decomposition, measurement. Throws
/// NotMajorized when the conversion is impossible.
Protocol plan(const WeightVector& alpha, const WeightVector& beta, PlanTrace* trace = nullptr);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;  // names of the checks that failed

    explicit operator bool() const { return ok; }
};

/// Re-checks every invariant in exact arithmetic: the transfer matrix is
/// doubly stochastic and maps beta to alpha, the decomposition reconstructs
/// it, the elements are complete, each element's Born probability equals its
/// weight, and every corrected outcome equals beta.
VerifyReport verify_protocol(const Protocol& p);

/// The column-stochastic aggregate of the outcome permutations:
/// gamma[i][j] = sum of p over elements with sigma(j) = i. Doubly stochastic
/// whenever the weights sum to one.
BistochasticMatrix gamma_from_povm(const std::vector<PovmElement>& elements);

/// Standalone certifier for the reverse direction: accepts any diagonal
/// measurement family and returns true iff (a) every element satisfies
/// permute(A_sigma * alpha, sigma) == p * beta with p > 0 and a nonnegative
/// diagonal, (b) the gamma matrix is doubly stochastic, and (c)
/// gamma * beta == alpha. A true result certifies that beta majorizes alpha.
bool verify_converse(const WeightVector& alpha, const WeightVector& beta,
                     const std::vector<PovmElement>& elements);

/// Lossless JSON round-trip: deserialize(serialize(p)) == p. Rationals are
/// rendered "num/den" in lowest terms, permutations as 1-based image arrays.
std::string serialize(const Protocol& p);
Protocol deserialize(std::string_view text);

}  // namespace locc
