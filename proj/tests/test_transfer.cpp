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

#include "locc/errors.hpp"
#include "locc/majorization.hpp"
#include "locc/random_instance.hpp"
#include "locc/transfer.hpp"
#include "test_util.hpp"

using namespace locc;
using namespace locc::testing;

TEST_CASE("the known witness matrix validates against the example pair") {
    CHECK(validate_transfer(example_transfer(), example_beta(), example_alpha()));
}

TEST_CASE("validate_transfer rejects mismatches") {
    CHECK(validate_transfer(RationalMatrix::identity(3), example_beta(), example_beta()));
    CHECK_FALSE(validate_transfer(RationalMatrix::identity(3), example_beta(), example_alpha()));
    CHECK_FALSE(
        validate_transfer(mx({{"1/2", "1/2"}, {"1/2", "1/4"}}), wv({"1", "0"}), wv({"1", "0"})));
    CHECK_THROWS_AS(validate_transfer(RationalMatrix::identity(2), example_beta(), example_alpha()),
                    DimensionMismatch);
}

TEST_CASE("build_transfer_matrix on the example pair") {
    std::vector<TTransform> chain;
    const BistochasticMatrix d = build_transfer_matrix(example_beta(), example_alpha(), &chain);
    CHECK(validate_transfer(d.matrix(), example_beta(), example_alpha()));
    CHECK(chain.size() <= 2);  // at most N-1 steps
    for (const TTransform& t : chain) {
        CHECK(t.j < t.k);
        CHECK(t.t >= Rational(0));
        CHECK(t.t <= Rational(1));
        CHECK(t.matrix(3).is_doubly_stochastic());
    }
}

TEST_CASE("build_transfer_matrix for equal vectors") {
    const BistochasticMatrix d = build_transfer_matrix(example_beta(), example_beta());
    CHECK(d.apply(example_beta()) == example_beta());
}

TEST_CASE("the 2x2 instance with a forced answer") {
    // Doubly stochastic 2x2 matrices form the one-parameter family
    // [[t, 1-t], [1-t, t]]; mapping (1, 0) to (1/2, 1/2) forces t = 1/2.
    const BistochasticMatrix d = build_transfer_matrix(wv({"1", "0"}), wv({"1/2", "1/2"}));
    CHECK(d.matrix() == mx({{"1/2", "1/2"}, {"1/2", "1/2"}}));
}

TEST_CASE("build_transfer_matrix refuses non-majorizing pairs") {
    CHECK_THROWS_AS(build_transfer_matrix(wv({"1/3", "1/3", "1/3"}), wv({"1/2", "1/4", "1/4"})),
                    NotMajorized);
    CHECK_THROWS_AS(build_transfer_matrix(example_alpha(), example_beta()), NotMajorized);
}

TEST_CASE("unsorted inputs work on both sides") {
    const WeightVector beta = permute(example_beta(), perm1({3, 1, 2}));
    const WeightVector alpha = example_alpha();
    const BistochasticMatrix d = build_transfer_matrix(beta, alpha);
    CHECK(validate_transfer(d.matrix(), beta, alpha));
}

TEST_CASE("random majorizing pairs build valid transfers") {
    SplitMix64 rng(211);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng.below(10) + 1;
        const WeightVector beta = random_weight_vector(n, rng);
        const WeightVector alpha = random_bistochastic(n, rng).apply(beta);
        REQUIRE(majorizes(beta, alpha));

        std::vector<TTransform> chain;
        const BistochasticMatrix d = build_transfer_matrix(beta, alpha, &chain);
        CHECK(validate_transfer(d.matrix(), beta, alpha));
        CHECK(chain.size() + 1 <= n);
    }
}
