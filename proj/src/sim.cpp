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

#include "locc/sim.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "locc/errors.hpp"

namespace locc {

PureBipartiteState::PureBipartiteState(std::size_t n, std::vector<Complex> amp)
    : n_(n), amp_(std::move(amp)) {}

PureBipartiteState PureBipartiteState::from_amplitudes(std::size_t dimension,
                                                       std::vector<Complex> amplitudes) {
    if (dimension == 0 || amplitudes.size() != dimension * dimension) {
        throw ValidationError("amplitude count must be dimension^2");
    }
    double norm_sq = 0.0;
    for (const Complex& a : amplitudes) {
        norm_sq += std::norm(a);
    }
    if (norm_sq < kZeroProbability) {
        throw ValidationError("cannot normalize the zero vector");
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amplitudes) {
        a *= scale;
    }
    return PureBipartiteState(dimension, std::move(amplitudes));
}

double PureBipartiteState::norm() const {
    double norm_sq = 0.0;
    for (const Complex& a : amp_) {
        norm_sq += std::norm(a);
    }
    return std::sqrt(norm_sq);
}

PureBipartiteState state_from_weights(const WeightVector& w) {
    const std::size_t n = w.size();
    std::vector<Complex> amp(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        amp[i * n + i] = Complex(std::sqrt(w[i].to_double()), 0.0);
    }
    return PureBipartiteState(n, std::move(amp));
}

MeasurementOutcome apply_measurement_outcome(const PureBipartiteState& s, const PovmElement& e) {
    const std::size_t n = s.dimension();
    if (e.diag.size() != n) {
        throw DimensionMismatch("element dimension does not match the state");
    }
    std::vector<Complex> amp(s.amplitudes());
    for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::sqrt(e.diag[i].to_double());
        for (std::size_t j = 0; j < n; ++j) {
            amp[i * n + j] *= scale;
        }
    }
    double prob = 0.0;
    for (const Complex& a : amp) {
        prob += std::norm(a);
    }
    if (prob < kZeroProbability) {
        throw ZeroProbabilityOutcome("outcome probability vanishes; post state undefined");
    }
    const double scale = 1.0 / std::sqrt(prob);
    for (Complex& a : amp) {
        a *= scale;
    }
    return MeasurementOutcome{prob, PureBipartiteState(n, std::move(amp))};
}

PureBipartiteState apply_local_permutation(const PureBipartiteState& s, const Permutation& sigma,
                                           Side side) {
    const std::size_t n = s.dimension();
    if (sigma.size() != n) {
        throw DimensionMismatch("permutation size does not match the state");
    }
    // U maps |sigma(i)> to |i>, so the new amplitude at index i is the old
    // amplitude at sigma(i). Pure relabeling: the norm is untouched.
    std::vector<Complex> amp(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = (side != Side::Bob) ? sigma(i) : i;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = (side != Side::Alice) ? sigma(j) : j;
            amp[i * n + j] = s.amplitude(row, col);
        }
    }
    return PureBipartiteState(n, std::move(amp));
}

double fidelity(const PureBipartiteState& a, const PureBipartiteState& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("states have different dimensions");
    }
    Complex overlap(0.0, 0.0);
    for (std::size_t idx = 0; idx < a.amplitudes().size(); ++idx) {
        overlap += std::conj(a.amplitudes()[idx]) * b.amplitudes()[idx];
    }
    return std::norm(overlap);
}

std::vector<double> schmidt_weights(const PureBipartiteState& s) {
    const std::size_t n = s.dimension();
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.amplitude(i, j);
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double sv = svd.singularValues()(static_cast<Eigen::Index>(i));
        weights[i] = sv * sv;
    }
    // Eigen returns singular values descending already.
    return weights;
}

SimulationReport run_protocol_simulation(const Protocol& p, const SimOptions& options) {
    const std::size_t n = p.alpha.size();
    if (n > options.max_dimension) {
        throw ValidationError("protocol dimension exceeds the simulation size guard");
    }
    const PureBipartiteState source = state_from_weights(p.alpha);
    const PureBipartiteState target = state_from_weights(p.beta);

    SimulationReport report;
    for (const PovmElement& e : p.elements) {
        const MeasurementOutcome outcome = apply_measurement_outcome(source, e);
        const PureBipartiteState corrected =
            apply_local_permutation(outcome.post, e.sigma, Side::Both);
        const double f = fidelity(corrected, target);
        const bool prob_ok =
            std::abs(outcome.probability - e.p.to_double()) <= kProbabilityTolerance;
        const bool fid_ok = f >= 1.0 - kFidelityTolerance;
        report.outcomes.push_back(
            OutcomeReport{e.sigma, e.p, outcome.probability, f, prob_ok, fid_ok});
        report.probability_sum += outcome.probability;
    }
    report.probability_sum_ok = std::abs(report.probability_sum - 1.0) <= kProbabilityTolerance;
    report.ok = report.probability_sum_ok && !report.outcomes.empty();
    for (const OutcomeReport& o : report.outcomes) {
        report.ok = report.ok && o.probability_ok && o.fidelity_ok;
    }
    return report;
}

}  // namespace locc
