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
#include "locc/permutation.hpp"
#include "locc/rational.hpp"

namespace locc {

/// Nonzero pattern of a square matrix as a balanced bipartite graph between
/// row and column vertices.
struct SupportGraph {
    std::size_t n;
    /// rows_of_column[j] lists the rows i with a nonzero entry at (i, j),
    /// in increasing order.
    std::vector<std::vector<std::size_t>> rows_of_column;

    static SupportGraph of(const RationalMatrix& m);
};

struct BirkhoffTerm {
    Rational p;
    Permutation sigma;

    bool operator==(const BirkhoffTerm&) const = default;
};

/// Convex combination of permutation matrices: sum of p * P_sigma over the
/// terms reconstructs the source matrix, all p > 0 summing to one.
struct BirkhoffDecomposition {
    std::vector<BirkhoffTerm> terms;

    bool operator==(const BirkhoffDecomposition&) const = default;
};

/// A permutation sigma with d[sigma(j)][j] != 0 for all j: an all-nonzero
/// arrangement, found as a perfect matching in the support graph. Existence
/// is guaranteed for doubly stochastic input. Columns are processed and
/// candidate rows scanned in increasing index order, so the result is
/// deterministic.
Permutation find_nonzero_arrangement(const BistochasticMatrix& d);

/// Support-only variant used on peel residues (positive multiples of doubly
/// stochastic matrices). Throws NoPerfectMatching when no arrangement
/// exists, which signals input that cannot be doubly stochastic.
Permutation find_nonzero_arrangement(const RationalMatrix& m);

/// Greedy peeling: repeatedly find an arrangement of the residue, subtract
/// the minimal entry on it times the corresponding permutation matrix, and
/// record the term. Each peel zeroes at least one entry, which bounds the
/// term count by N^2 - 2N + 2.
BirkhoffDecomposition birkhoff_decompose(const BistochasticMatrix& d);

/// True iff all p > 0, the p sum to one, and sum of p * P_sigma equals d
/// exactly.
bool validate_decomposition(const RationalMatrix& d, const BirkhoffDecomposition& dec);

/// Sum of p * P_sigma over the terms.
RationalMatrix reconstruct(const BirkhoffDecomposition& dec, std::size_t n);

}  // namespace locc
