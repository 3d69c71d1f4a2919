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

#include "locc/povm.hpp"

#include "locc/errors.hpp"

namespace locc {

std::vector<PovmElement> build_povm(const WeightVector& alpha, const WeightVector& beta,
                                    const BirkhoffDecomposition& dec) {
    const std::size_t n = alpha.size();
    if (beta.size() != n) {
        throw DimensionMismatch("weight vectors must have equal length");
    }

    struct TermView {
        const BirkhoffTerm* term;
        std::vector<Rational> beta_shuffled;  // beta_shuffled[i] = beta[sigma^-1(i)]
    };
    std::vector<TermView> views;
    views.reserve(dec.terms.size());
    for (const BirkhoffTerm& term : dec.terms) {
        if (term.sigma.size() != n) {
            throw DimensionMismatch("decomposition term dimension mismatch");
        }
        if (!term.p.is_positive()) {
            throw InconsistentDecomposition("decomposition weights must be positive");
        }
        views.push_back({&term, permute(beta.entries(), term.sigma.inverse())});
    }

    // The decomposition must reproduce alpha coordinate-wise:
    // sum over terms of p * beta[sigma^-1(i)] == alpha[i].
    for (std::size_t i = 0; i < n; ++i) {
        Rational reproduced;
        for (const TermView& view : views) {
            reproduced += view.term->p * view.beta_shuffled[i];
        }
        if (reproduced != alpha[i]) {
            throw InconsistentDecomposition(
                "decomposition does not map the target weights onto the source weights");
        }
    }

    std::vector<PovmElement> elements;
    elements.reserve(views.size());
    for (const TermView& view : views) {
        std::vector<Rational> diag;
        diag.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i].is_zero()) {
                // Forced beta[sigma^-1(i)] = 0 by the check above; the state
                // has no amplitude here, any nonnegative value preserving
                // completeness works and p does.
                diag.push_back(view.term->p);
            } else {
                diag.push_back(view.term->p * view.beta_shuffled[i] / alpha[i]);
            }
        }
        elements.push_back(PovmElement{view.term->sigma, std::move(diag), view.term->p});
    }
    return elements;
}

bool check_completeness(const std::vector<PovmElement>& elements) {
    if (elements.empty()) {
        return false;
    }
    const std::size_t n = elements.front().diag.size();
    std::vector<Rational> column_totals(n);
    for (const PovmElement& e : elements) {
        if (e.diag.size() != n) {
            return false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (e.diag[i].is_negative()) {
                return false;
            }
            column_totals[i] += e.diag[i];
        }
    }
    const Rational one(1);
    for (const Rational& total : column_totals) {
        if (total != one) {
            return false;
        }
    }
    return true;
}

Rational outcome_probability(const PovmElement& e, const WeightVector& alpha) {
    if (e.diag.size() != alpha.size()) {
        throw DimensionMismatch("element dimension does not match the weight vector");
    }
    Rational prob;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        prob += e.diag[i] * alpha[i];
    }
    return prob;
}

std::vector<Rational> unnormalized_outcome_weights(const PovmElement& e,
                                                   const WeightVector& alpha) {
    if (e.diag.size() != alpha.size()) {
        throw DimensionMismatch("element dimension does not match the weight vector");
    }
    std::vector<Rational> out;
    out.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        out.push_back(e.diag[i] * alpha[i]);
    }
    return out;
}

WeightVector post_measurement_weights(const PovmElement& e, const WeightVector& alpha) {
    std::vector<Rational> weights = unnormalized_outcome_weights(e, alpha);
    for (Rational& w : weights) {
        w /= e.p;
    }
    if (sum(weights) != Rational(1)) {
        throw NotNormalized("post-measurement weights do not sum to one");
    }
    return WeightVector(std::move(weights));
}

}  // namespace locc
