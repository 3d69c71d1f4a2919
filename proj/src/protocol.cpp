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

#include "locc/protocol.hpp"

#include <algorithm>

#include "locc/errors.hpp"
#include "locc/json_io.hpp"
#include "locc/majorization.hpp"

namespace locc {

Protocol plan(const WeightVector& alpha, const WeightVector& beta, PlanTrace* trace) {
    if (alpha.size() != beta.size()) {
        throw DimensionMismatch("weight vectors must have equal length");
    }
    std::vector<TTransform> chain;
    BistochasticMatrix transfer =
        build_transfer_matrix(beta, alpha, trace != nullptr ? &chain : nullptr);
    BirkhoffDecomposition decomposition = birkhoff_decompose(transfer);
    std::vector<PovmElement> elements = build_povm(alpha, beta, decomposition);
    if (trace != nullptr) {
        trace->transfer_chain = std::move(chain);
    }
    return Protocol{alpha, beta, transfer.matrix(), std::move(decomposition),
                    std::move(elements)};
}

VerifyReport verify_protocol(const Protocol& p) {
    VerifyReport report;
    auto fail = [&report](const char* name) {
        report.ok = false;
        if (std::find(report.failures.begin(), report.failures.end(), name) ==
            report.failures.end()) {
            report.failures.emplace_back(name);
        }
    };

    const std::size_t n = p.alpha.size();
    if (p.beta.size() != n || p.transfer.size() != n) {
        fail("dimensions");
        return report;
    }

    if (!validate_transfer(p.transfer, p.beta, p.alpha)) {
        fail("transfer");
    }
    if (!validate_decomposition(p.transfer, p.decomposition)) {
        fail("decomposition");
    }
    if (!check_completeness(p.elements)) {
        fail("completeness");
    }
    for (const PovmElement& e : p.elements) {
        if (e.sigma.size() != n || e.diag.size() != n) {
            fail("dimensions");
            continue;
        }
        if (outcome_probability(e, p.alpha) != e.p) {
            fail("outcome_probability");
        }
        try {
            if (permute(post_measurement_weights(e, p.alpha), e.sigma) != p.beta) {
                fail("corrected_weights");
            }
        } catch (const Error&) {
            fail("corrected_weights");
        }
    }
    return report;
}

namespace {

RationalMatrix gamma_matrix(const std::vector<PovmElement>& elements) {
    if (elements.empty()) {
        throw ValidationError("gamma requires at least one element");
    }
    const std::size_t n = elements.front().sigma.size();
    RationalMatrix gamma(n);
    for (const PovmElement& e : elements) {
        if (e.sigma.size() != n) {
            throw DimensionMismatch("elements must share one dimension");
        }
        for (std::size_t j = 0; j < n; ++j) {
            gamma.at(e.sigma(j), j) += e.p;
        }
    }
    return gamma;
}

}  // namespace

BistochasticMatrix gamma_from_povm(const std::vector<PovmElement>& elements) {
    return BistochasticMatrix(gamma_matrix(elements));
}

bool verify_converse(const WeightVector& alpha, const WeightVector& beta,
                     const std::vector<PovmElement>& elements) {
    const std::size_t n = alpha.size();
    if (beta.size() != n || elements.empty()) {
        return false;
    }
    for (const PovmElement& e : elements) {
        if (e.sigma.size() != n || e.diag.size() != n || !e.p.is_positive()) {
            return false;
        }
        for (const Rational& entry : e.diag) {
            if (entry.is_negative()) {
                return false;
            }
        }
        // permute(A_sigma * alpha, sigma) == p * beta
        const std::vector<Rational> shuffled =
            permute(unnormalized_outcome_weights(e, alpha), e.sigma);
        for (std::size_t i = 0; i < n; ++i) {
            if (shuffled[i] != e.p * beta[i]) {
                return false;
            }
        }
    }
    const RationalMatrix gamma = gamma_matrix(elements);
    return gamma.is_doubly_stochastic() && gamma.apply(beta.entries()) == alpha.entries();
}

std::string serialize(const Protocol& p) { return protocol_to_json(p).dump(2) + "\n"; }

Protocol deserialize(std::string_view text) {
    return protocol_from_json(parse_json_text(text));
}

}  // namespace locc
