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

#include <cstdint>

#include "locc/matrix.hpp"
#include "locc/permutation.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

/// SplitMix64 (Steele, Lea & Flood). Chosen over std::mt19937 plus the
/// standard distributions because its output sequence is fully specified, so
/// seeded runs reproduce bit-for-bit on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be positive. The modulo
    /// bias is irrelevant for test-data generation and keeps the sequence
    /// trivially reproducible.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle of the identity, consuming size-1 draws.
Permutation random_permutation(std::size_t n, SplitMix64& rng);

/// Strictly positive rational weights: n draws from {1..1000}, normalized by
/// their total.
WeightVector random_weight_vector(std::size_t n, SplitMix64& rng);

/// Convex combination of at most n random permutation matrices with random
/// positive rational weights.
BistochasticMatrix random_bistochastic(std::size_t n, SplitMix64& rng);

struct RandomInstance {
    WeightVector alpha;
    WeightVector beta;
};

/// A pair with beta majorizing alpha by construction: beta is a random
/// weight vector, alpha = D * beta for a random doubly stochastic D.
/// Deterministic for a fixed seed.
RandomInstance random_majorizing_pair(std::size_t n, std::uint64_t seed);

}  // namespace locc
