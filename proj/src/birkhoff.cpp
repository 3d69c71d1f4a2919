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

#include "locc/birkhoff.hpp"

#include <cassert>

#include "locc/errors.hpp"

namespace locc {

SupportGraph SupportGraph::of(const RationalMatrix& m) {
    SupportGraph g{m.size(), std::vector<std::vector<std::size_t>>(m.size())};
    for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m.at(i, j).is_zero()) {
                g.rows_of_column[j].push_back(i);
            }
        }
    }
    return g;
}

namespace {

// Kuhn's augmenting-path matching over the support graph.
struct Matcher {
    const SupportGraph& graph;
    std::vector<long> column_of_row;  // -1 while unmatched
    std::vector<char> visited;

    bool augment(std::size_t column) {
        for (std::size_t row : graph.rows_of_column[column]) {
            if (visited[row]) {
                continue;
            }
            visited[row] = 1;
            if (column_of_row[row] < 0 ||
                augment(static_cast<std::size_t>(column_of_row[row]))) {
                column_of_row[row] = static_cast<long>(column);
                return true;
            }
        }
        return false;
    }
};

}  // namespace

Permutation find_nonzero_arrangement(const RationalMatrix& m) {
    const SupportGraph graph = SupportGraph::of(m);
    Matcher matcher{graph, std::vector<long>(graph.n, -1), {}};
    for (std::size_t column = 0; column < graph.n; ++column) {
        matcher.visited.assign(graph.n, 0);
        if (!matcher.augment(column)) {
            throw NoPerfectMatching(
                "support has no all-nonzero arrangement; matrix cannot be doubly stochastic");
        }
    }
    // column_of_row[i] = j means sigma(j) = i.
    std::vector<std::size_t> images(graph.n);
    for (std::size_t row = 0; row < graph.n; ++row) {
        images[static_cast<std::size_t>(matcher.column_of_row[row])] = row;
    }
    return Permutation(std::move(images));
}

Permutation find_nonzero_arrangement(const BistochasticMatrix& d) {
    return find_nonzero_arrangement(d.matrix());
}

BirkhoffDecomposition birkhoff_decompose(const BistochasticMatrix& d) {
    RationalMatrix residue = d.matrix();
    const std::size_t n = residue.size();
    BirkhoffDecomposition out;

    std::size_t live = residue.nonzero_count();
    while (live > 0) {
        const Permutation sigma = find_nonzero_arrangement(residue);
        Rational p = residue.at(sigma(0), 0);
        for (std::size_t j = 1; j < n; ++j) {
            assert(!residue.at(sigma(j), j).is_zero());
            p = min(p, residue.at(sigma(j), j));
        }
        assert(p.is_positive());
        for (std::size_t j = 0; j < n; ++j) {
            residue.at(sigma(j), j) -= p;
        }
        out.terms.push_back(BirkhoffTerm{p, sigma});

        const std::size_t remaining = residue.nonzero_count();
        assert(remaining < live);  // the minimal entry on the arrangement is now zero
        live = remaining;
    }

    assert(out.terms.size() <= n * n - 2 * n + 2);
    return out;
}

RationalMatrix reconstruct(const BirkhoffDecomposition& dec, std::size_t n) {
    RationalMatrix out(n);
    for (const BirkhoffTerm& term : dec.terms) {
        if (term.sigma.size() != n) {
            throw DimensionMismatch("decomposition term dimension mismatch");
        }
        for (std::size_t j = 0; j < n; ++j) {
            out.at(term.sigma(j), j) += term.p;
        }
    }
    return out;
}

bool validate_decomposition(const RationalMatrix& d, const BirkhoffDecomposition& dec) {
    if (dec.terms.empty()) {
        return false;
    }
    Rational total;
    for (const BirkhoffTerm& term : dec.terms) {
        if (!term.p.is_positive() || term.sigma.size() != d.size()) {
            return false;
        }
        total += term.p;
    }
    return total == Rational(1) && reconstruct(dec, d.size()) == d;
}

}  // namespace locc
