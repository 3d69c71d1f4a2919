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

#include <complex>
#include <cstddef>
#include <vector>

#include "locc/permutation.hpp"
#include "locc/povm.hpp"
#include "locc/protocol.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

// Floating-point tolerances for the state-vector cross-check. Probabilities
// and norms are direct sums of squares; fidelities and Schmidt weights pass
// through an SVD and lose a little more precision.
inline constexpr double kProbabilityTolerance = 1e-12;
inline constexpr double kFidelityTolerance = 1e-10;
inline constexpr double kZeroProbability = 1e-15;
inline constexpr std::size_t kDefaultMaxSimDimension = 128;

using Complex = std::complex<double>;

enum class Side { Alice, Bob, Both };

struct MeasurementOutcome;

/// Pure state of two N-level systems stored as its N x N amplitude matrix:
/// amplitude(i, j) multiplies |i> (first party) tensor |j> (second party).
/// Always unit norm; operations return new states.
class PureBipartiteState {
  public:
    /// Normalizes the given row-major amplitudes; throws ValidationError on
    /// zero norm or an amplitude count that is not dimension^2.
    static PureBipartiteState from_amplitudes(std::size_t dimension,
                                              std::vector<Complex> amplitudes);

    std::size_t dimension() const { return n_; }
    Complex amplitude(std::size_t i, std::size_t j) const { return amp_[i * n_ + j]; }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    double norm() const;

  private:
    PureBipartiteState(std::size_t n, std::vector<Complex> amp);

    std::size_t n_;
    std::vector<Complex> amp_;

    friend PureBipartiteState state_from_weights(const WeightVector& w);
    friend MeasurementOutcome apply_measurement_outcome(const PureBipartiteState& s,
                                                        const PovmElement& e);
    friend PureBipartiteState apply_local_permutation(const PureBipartiteState& s,
                                                      const Permutation& sigma, Side side);
};

/// The Schmidt-form state with the given weights: diagonal amplitudes
/// sqrt(w[i]).
PureBipartiteState state_from_weights(const WeightVector& w);

struct MeasurementOutcome {
    double probability;
    PureBipartiteState post;
};

/// Applies the Kraus operator sqrt(A) tensor identity for the element: row i
/// of the amplitude matrix is scaled by sqrt(diag[i]). Returns the outcome
/// probability and the renormalized post state; throws
/// ZeroProbabilityOutcome below kZeroProbability.
MeasurementOutcome apply_measurement_outcome(const PureBipartiteState& s, const PovmElement& e);

/// The relabeling unitary mapping |sigma(i)> to |i> on the selected side(s).
/// Applied to Both sides of a Schmidt-form state, weight i becomes
/// w[sigma(i)].
PureBipartiteState apply_local_permutation(const PureBipartiteState& s,
                                           const Permutation& sigma, Side side);

/// |<a|b>|^2.
double fidelity(const PureBipartiteState& a, const PureBipartiteState& b);

/// Squared singular values of the amplitude matrix, descending.
std::vector<double> schmidt_weights(const PureBipartiteState& s);

struct OutcomeReport {
    Permutation sigma;
    Rational p_exact;
    double p_simulated;
    double post_correction_fidelity;
    bool probability_ok;  // |p_simulated - p_exact| <= kProbabilityTolerance
    bool fidelity_ok;     // fidelity >= 1 - kFidelityTolerance
};

struct SimulationReport {
    std::vector<OutcomeReport> outcomes;  // ordered by element index
    double probability_sum = 0.0;
    bool probability_sum_ok = false;
    bool ok = false;
};

struct SimOptions {
    std::size_t max_dimension = kDefaultMaxSimDimension;
};

/// Executes the protocol as actual linear algebra on the source state: for
/// every outcome, measure, apply the correction on both sides, and compare
/// with the exact predictions and the target state. Expects a protocol that
/// passes verify_protocol.
SimulationReport run_protocol_simulation(const Protocol& p, const SimOptions& options = {});

}  // namespace locc
