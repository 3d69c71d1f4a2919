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

#include <cstddef>
#include <string>
#include <vector>

#include "locc/errors.hpp"

namespace locc {

/// Bijection on {1..N}. Indices are 0-based in code; the 1-based form appears
/// only in serialization and printed output.
///
/// Conventions used throughout the library:
///   - permutation_matrix(sigma) has entry (i, j) = 1 iff i = sigma(j)
///   - right action on vectors: permute(v, sigma)[i] = v[sigma(i)]
///   - hence permutation_matrix(sigma) * v == permute(v, sigma.inverse())
class Permutation {
  public:
    /// 0-based images: images[i] = sigma(i). Must be a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
    static Permutation from_one_based(const std::vector<long long>& images);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }
    std::vector<std::size_t> to_one_based() const;

    Permutation inverse() const;
    bool is_identity() const;

    /// Cycle notation with 1-based labels, e.g. "(1 2)", "(1 3 2)", "()" for
    /// the identity.
    std::string to_cycle_string() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<std::size_t> images_;
};

/// Composition: (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// Right action: result[i] = v[sigma(i)].
template <typename T>
std::vector<T> permute(const std::vector<T>& v, const Permutation& sigma) {
    if (v.size() != sigma.size()) {
        throw DimensionMismatch("permutation size does not match vector length");
    }
    std::vector<T> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(v[sigma(i)]);
    }
    return out;
}

}  // namespace locc
