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

#include <stdexcept>

namespace locc {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: bad rational literal, bad JSON, schema violation.
struct ParseError : Error {
    using Error::Error;
};

/// A value breaks a structural invariant (weights not summing to one,
/// a matrix that is not doubly stochastic, a non-bijective permutation, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Operands have incompatible dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Conversion impossible: the target weights do not majorize the source.
struct NotMajorized : Error {
    using Error::Error;
};

/// The nonzero pattern admits no all-nonzero arrangement; the input cannot
/// have been doubly stochastic.
struct NoPerfectMatching : Error {
    using Error::Error;
};

/// A decomposition is inconsistent with the weight vectors it is paired with.
struct InconsistentDecomposition : Error {
    using Error::Error;
};

/// A vector that should be a probability vector does not sum to one.
struct NotNormalized : Error {
    using Error::Error;
};

/// A measurement branch has vanishing probability; its post state is undefined.
struct ZeroProbabilityOutcome : Error {
    using Error::Error;
};

}  // namespace locc
