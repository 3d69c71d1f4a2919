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

#include "locc/errors.hpp"
#include "locc/majorization.hpp"
#include "locc/random_instance.hpp"
#include "test_util.hpp"

using namespace locc;
using namespace locc::testing;

namespace {

// Literal prefix-sum check after plain descending sorts, written
// independently of the library's sort/certificate path.
bool majorizes_oracle(const WeightVector& beta, const WeightVector& alpha) {
    std::vector<Rational> b = beta.entries();
    std::vector<Rational> a = alpha.entries();
    std::sort(b.begin(), b.end(), [](const Rational& x, const Rational& y) { return y < x; });
    std::sort(a.begin(), a.end(), [](const Rational& x, const Rational& y) { return y < x; });
    Rational pb;
    Rational pa;
    for (std::size_t k = 0; k < b.size(); ++k) {
        pb += b[k];
        pa += a[k];
        if (pb < pa) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("majorizes on fixed instances") {
    CHECK(majorizes(example_beta(), example_alpha()));
    CHECK(majorizes(example_alpha(), example_alpha()));
    CHECK(majorizes(example_beta(), example_beta()));
    // The uniform vector majorizes only itself: first prefix 1/3 < 1/2.
    CHECK_FALSE(majorizes(wv({"1/3", "1/3", "1/3"}), wv({"1/2", "1/4", "1/4"})));
    // Neither does the example pair work in reverse.
    CHECK_FALSE(majorizes(example_alpha(), example_beta()));
    CHECK_THROWS_AS(majorizes(wv({"1"}), wv({"1/2", "1/2"})), DimensionMismatch);
}

TEST_CASE("majorization certificate lists all prefix pairs") {
    SUBCASE("example pair has no violation") {
        const auto cert = majorization_certificate(example_beta(), example_alpha());
        CHECK(cert.holds());
        REQUIRE(cert.rows.size() == 3);
        CHECK(cert.rows[0].beta_prefix == Rational(3, 5));
        CHECK(cert.rows[0].alpha_prefix == Rational(2, 5));
        CHECK(cert.rows[1].beta_prefix == Rational(9, 10));
        CHECK(cert.rows[1].alpha_prefix == Rational(3, 4));
        CHECK(cert.rows[2].beta_prefix == Rational(1));
        CHECK(cert.rows[2].alpha_prefix == Rational(1));
    }
    SUBCASE("equal vectors give equal prefixes") {
        const auto cert = majorization_certificate(example_alpha(), example_alpha());
        CHECK(cert.holds());
        for (const auto& row : cert.rows) {
            CHECK(row.beta_prefix == row.alpha_prefix);
        }
    }
    SUBCASE("first violation is reported") {
        const auto cert = majorization_certificate(wv({"1/3", "1/3", "1/3"}), wv({"1", "0", "0"}));
        REQUIRE(cert.first_violation.has_value());
        CHECK(*cert.first_violation == 1);
        CHECK_FALSE(cert.holds());
    }
    SUBCASE("violation can appear after a dominating prefix") {
        const auto cert =
            majorization_certificate(wv({"1/2", "1/4", "1/4"}), wv({"9/20", "9/20", "1/10"}));
        REQUIRE(cert.first_violation.has_value());
        CHECK(*cert.first_violation == 2);
    }
}

TEST_CASE("majorizes agrees with the literal prefix-sum oracle") {
    SplitMix64 rng(101);
    int trues = 0;
    int falses = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = rng.below(8) + 1;
        WeightVector beta = random_weight_vector(n, rng);
        WeightVector alpha(n == 1 ? beta : random_weight_vector(n, rng));
        if (i % 2 == 0) {
            // Half the cases majorize by construction.
            alpha = random_bistochastic(n, rng).apply(beta);
        }
        const bool got = majorizes(beta, alpha);
        CHECK(got == majorizes_oracle(beta, alpha));
        CHECK(majorizes(alpha, beta) == majorizes_oracle(alpha, beta));
        (got ? trues : falses) += 1;
    }
    CHECK(trues > 0);
    CHECK(falses > 0);
}

TEST_CASE("mutual majorization implies equal sorted vectors") {
    SplitMix64 rng(103);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng.below(6) + 1;
        const WeightVector beta = random_weight_vector(n, rng);
        // Permuted copies majorize each other.
        const WeightVector alpha = permute(beta, random_permutation(n, rng));
        CHECK(majorizes(beta, alpha));
        CHECK(majorizes(alpha, beta));
        CHECK(sort_descending(beta).sorted == sort_descending(alpha).sorted);

        const WeightVector other = random_weight_vector(n, rng);
        if (majorizes(other, beta) && majorizes(beta, other)) {
            CHECK(sort_descending(other).sorted == sort_descending(beta).sorted);
        }
    }
}

TEST_CASE("majorizes is invariant under permuting either argument") {
    SplitMix64 rng(107);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng.below(6) + 2;
        const WeightVector beta = random_weight_vector(n, rng);
        const WeightVector alpha = random_bistochastic(n, rng).apply(beta);
        const bool base = majorizes(beta, alpha);
        CHECK(base == majorizes(permute(beta, random_permutation(n, rng)),
                                permute(alpha, random_permutation(n, rng))));
    }
}
