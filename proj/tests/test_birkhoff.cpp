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

#include <doctest.h>

#include <algorithm>

#include "locc/birkhoff.hpp"
#include "locc/errors.hpp"
#include "locc/random_instance.hpp"
#include "test_util.hpp"

using namespace locc;
using namespace locc::testing;

namespace {

bool arrangement_is_valid(const RationalMatrix& m, const Permutation& sigma) {
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m.at(sigma(j), j).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("find_nonzero_arrangement on fixed matrices") {
    CHECK(find_nonzero_arrangement(BistochasticMatrix(RationalMatrix::identity(4))) ==
          Permutation::identity(4));
    for (const Permutation& sigma : all_permutations(4)) {
        CHECK(find_nonzero_arrangement(permutation_matrix(sigma)) == sigma);
    }
    const BistochasticMatrix witness{example_transfer()};
    CHECK(arrangement_is_valid(witness.matrix(), find_nonzero_arrangement(witness)));
}

TEST_CASE("support graph lists nonzero rows per column") {
    const SupportGraph g = SupportGraph::of(example_transfer());
    CHECK(g.n == 3);
    CHECK(g.rows_of_column[0] == std::vector<std::size_t>{0, 1, 2});
    CHECK(g.rows_of_column[1] == std::vector<std::size_t>{0, 1});
    CHECK(g.rows_of_column[2] == std::vector<std::size_t>{1, 2});
}

TEST_CASE("decomposing the witness matrix") {
    const BirkhoffDecomposition dec = birkhoff_decompose(BistochasticMatrix(example_transfer()));
    CHECK(validate_decomposition(example_transfer(), dec));
    CHECK(dec.terms.size() <= 5);  // N^2 - 2N + 2 for N = 3
}

TEST_CASE("decomposing the identity") {
    const BirkhoffDecomposition dec =
        birkhoff_decompose(BistochasticMatrix(RationalMatrix::identity(3)));
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].p == Rational(1));
    CHECK(dec.terms[0].sigma == Permutation::identity(3));
}

TEST_CASE("the flat 2x2 matrix has a unique decomposition") {
    // Over S_2, a*I + b*P_(12) = [[a, b], [b, a]]; matching [[1/2, 1/2],
    // [1/2, 1/2]] forces a = b = 1/2.
    const BirkhoffDecomposition dec =
        birkhoff_decompose(BistochasticMatrix(mx({{"1/2", "1/2"}, {"1/2", "1/2"}})));
    REQUIRE(dec.terms.size() == 2);
    CHECK(std::all_of(dec.terms.begin(), dec.terms.end(),
                      [](const BirkhoffTerm& t) { return t.p == Rational(1, 2); }));
    const bool has_identity = dec.terms[0].sigma.is_identity() || dec.terms[1].sigma.is_identity();
    const bool has_swap =
        dec.terms[0].sigma == perm1({2, 1}) || dec.terms[1].sigma == perm1({2, 1});
    CHECK(has_identity);
    CHECK(has_swap);
}

TEST_CASE("validate_decomposition") {
    CHECK(validate_decomposition(example_transfer(), example_decomposition()));

    BirkhoffDecomposition identity_only;
    identity_only.terms.push_back({Rational(1), Permutation::identity(3)});
    CHECK(validate_decomposition(RationalMatrix::identity(3), identity_only));
    CHECK_FALSE(validate_decomposition(example_transfer(), identity_only));

    SUBCASE("weights must be positive and sum to one") {
        BirkhoffDecomposition dec = example_decomposition();
        dec.terms[0].p = Rational(0);
        CHECK_FALSE(validate_decomposition(example_transfer(), dec));
        dec = example_decomposition();
        dec.terms.pop_back();
        CHECK_FALSE(validate_decomposition(example_transfer(), dec));
    }
    SUBCASE("empty decomposition is invalid") {
        CHECK_FALSE(validate_decomposition(RationalMatrix::identity(2), BirkhoffDecomposition{}));
    }
}

TEST_CASE("arrangement requires a doubly stochastic support") {
    // Columns 2 and 3 share support only in row 2: no perfect matching, so
    // the matrix cannot be doubly stochastic.
    RationalMatrix broken(3);
    broken.at(0, 0) = Rational(1);
    broken.at(1, 1) = Rational(1);
    broken.at(1, 2) = Rational(1);
    CHECK_THROWS_AS(find_nonzero_arrangement(broken), NoPerfectMatching);
    CHECK_THROWS_AS(BistochasticMatrix{broken}, ValidationError);
}

TEST_CASE("random doubly stochastic matrices decompose exactly") {
    SplitMix64 rng(307);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = rng.below(10) + 1;
        const BistochasticMatrix d = random_bistochastic(n, rng);
        const BirkhoffDecomposition dec = birkhoff_decompose(d);
        CHECK(validate_decomposition(d.matrix(), dec));
        CHECK(dec.terms.size() <= n * n - 2 * n + 2);

        // Permutations in a greedy peel are pairwise distinct.
        for (std::size_t a = 0; a < dec.terms.size(); ++a) {
            for (std::size_t b = a + 1; b < dec.terms.size(); ++b) {
                CHECK(dec.terms[a].sigma != dec.terms[b].sigma);
            }
        }
    }
}
