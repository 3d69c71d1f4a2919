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

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "locc/birkhoff.hpp"
#include "locc/matrix.hpp"
#include "locc/permutation.hpp"
#include "locc/rational.hpp"
#include "locc/weight_vector.hpp"

namespace locc::testing {

inline std::vector<Rational> rv(std::initializer_list<const char*> entries) {
    std::vector<Rational> out;
    for (const char* e : entries) {
        out.push_back(Rational::parse(e));
    }
    return out;
}

inline WeightVector wv(std::initializer_list<const char*> entries) {
    return WeightVector(rv(entries));
}

inline RationalMatrix mx(std::initializer_list<std::initializer_list<const char*>> rows) {
    RationalMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* e : row) {
            m.at(i, j++) = Rational::parse(e);
        }
        ++i;
    }
    return m;
}

inline Permutation perm1(std::initializer_list<long long> one_based_images) {
    return Permutation::from_one_based(std::vector<long long>(one_based_images));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// The running three-level example: convert the state with weights alpha into
// the one with weights beta.
inline WeightVector example_alpha() { return wv({"2/5", "1/4", "7/20"}); }
inline WeightVector example_beta() { return wv({"3/5", "3/10", "1/10"}); }

// A known transfer matrix for the example pair.
inline RationalMatrix example_transfer() {
    return mx({{"1/3", "2/3", "0"}, {"1/6", "1/3", "1/2"}, {"1/2", "0", "1/2"}});
}

// Its decomposition into the transposition (12), the identity and the
// 3-cycle (132) with weights 1/6, 1/3 and 1/2.
inline BirkhoffDecomposition example_decomposition() {
    BirkhoffDecomposition dec;
    dec.terms.push_back({Rational(1, 6), perm1({2, 1, 3})});
    dec.terms.push_back({Rational(1, 3), perm1({1, 2, 3})});
    dec.terms.push_back({Rational(1, 2), perm1({3, 1, 2})});
    return dec;
}

}  // namespace locc::testing
