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
#include "test_util.hpp"

using namespace locc;
using namespace locc::testing;

TEST_CASE("splitmix64 is the published sequence") {
    // First outputs for seed 1234567 (Vigna's reference implementation).
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
}

TEST_CASE("random pairs majorize by construction") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = seed % 10 + 1;
        const RandomInstance inst = random_majorizing_pair(n, seed);
        CHECK(inst.alpha.size() == n);
        CHECK(inst.beta.size() == n);
        CHECK(majorizes(inst.beta, inst.alpha));
    }
}

TEST_CASE("instances are deterministic in the seed") {
    const RandomInstance a = random_majorizing_pair(6, 42);
    const RandomInstance b = random_majorizing_pair(6, 42);
    const RandomInstance c = random_majorizing_pair(6, 43);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK((a.alpha != c.alpha || a.beta != c.beta));
}

TEST_CASE("size one collapses to the trivial pair") {
    const RandomInstance inst = random_majorizing_pair(1, 7);
    CHECK(inst.alpha == wv({"1"}));
    CHECK(inst.beta == wv({"1"}));
}

TEST_CASE("size zero is rejected") {
    CHECK_THROWS_AS(random_majorizing_pair(0, 1), ValidationError);
}

TEST_CASE("random generators keep their invariants") {
    SplitMix64 rng(904);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = rng.below(10) + 1;
        CHECK(random_bistochastic(n, rng).matrix().is_doubly_stochastic());
        const WeightVector w = random_weight_vector(n, rng);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(w[k].is_positive());
        }
    }
}
