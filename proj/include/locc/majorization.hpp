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

#include <optional>
#include <vector>

#include "locc/rational.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

/// True iff beta majorizes alpha: every k-prefix sum of descending-sorted
/// beta dominates the corresponding prefix sum of descending-sorted alpha.
/// Equality at k = N is automatic since both vectors sum to one. Inputs may
/// be unsorted; they are sorted internally.
bool majorizes(const WeightVector& beta, const WeightVector& alpha);

struct MajorizationCertificate {
    struct Row {
        std::size_t k;  // 1-based prefix length
        Rational beta_prefix;
        Rational alpha_prefix;
    };
    std::vector<Row> rows;                       // all N prefix-sum pairs
    std::optional<std::size_t> first_violation;  // smallest k with beta < alpha

    bool holds() const { return !first_violation.has_value(); }
};

/// All prefix-sum pairs in exact rationals, plus the first violating k if
/// any. Diagnostic companion to majorizes().
MajorizationCertificate majorization_certificate(const WeightVector& beta,
                                                 const WeightVector& alpha);

}  // namespace locc
