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

#include "locc/permutation.hpp"

#include <numeric>
#include <utility>

namespace locc {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (images_.empty()) {
        throw ValidationError("permutation must act on at least one element");
    }
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t image : images_) {
        if (image >= images_.size() || seen[image]) {
            throw ValidationError("permutation images are not a bijection");
        }
        seen[image] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    if (a >= n || b >= n) {
        throw ValidationError("transposition index out of range");
    }
    std::swap(images[a], images[b]);
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<long long>& images) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(images.size());
    for (long long image : images) {
        if (image < 1 || static_cast<std::size_t>(image) > images.size()) {
            throw ValidationError("one-based permutation image out of range");
        }
        zero_based.push_back(static_cast<std::size_t>(image - 1));
    }
    return Permutation(std::move(zero_based));
}

std::vector<std::size_t> Permutation::to_one_based() const {
    std::vector<std::size_t> out;
    out.reserve(images_.size());
    for (std::size_t image : images_) {
        out.push_back(image + 1);
    }
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<char> visited(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (visited[start] || images_[start] == start) {
            visited[start] = 1;
            continue;
        }
        out += '(';
        std::size_t i = start;
        bool first = true;
        while (!visited[i]) {
            visited[i] = 1;
            if (!first) {
                out += ' ';
            }
            out += std::to_string(i + 1);
            first = false;
            i = images_[i];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("cannot compose permutations of different sizes");
    }
    std::vector<std::size_t> images(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        images[i] = a(b(i));
    }
    return Permutation(std::move(images));
}

}  // namespace locc
