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

#include <json.hpp>

#include <string_view>
#include <vector>

#include "locc/birkhoff.hpp"
#include "locc/majorization.hpp"
#include "locc/matrix.hpp"
#include "locc/permutation.hpp"
#include "locc/povm.hpp"
#include "locc/rational.hpp"
#include "locc/weight_vector.hpp"

namespace locc {

struct Protocol;  // protocol.hpp

using Json = nlohmann::ordered_json;

/// Parses a JSON document; malformed input raises ParseError with the byte
/// location in the message.
Json parse_json_text(std::string_view text);

// Exact values travel as strings ("num/den" or decimal); JSON integers are
// accepted as exact, binary floating point numbers are rejected.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

std::vector<Rational> rationals_from_json(const Json& j);
Json rationals_to_json(const std::vector<Rational>& values);

WeightVector weight_vector_from_json(const Json& j);
Json weight_vector_to_json(const WeightVector& v);

RationalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RationalMatrix& m);

// Permutations are serialized as 1-based image arrays.
Permutation permutation_from_json(const Json& j);
Json permutation_to_json(const Permutation& sigma);

BirkhoffDecomposition decomposition_from_json(const Json& j);
Json decomposition_to_json(const BirkhoffDecomposition& dec);

PovmElement element_from_json(const Json& j);
Json element_to_json(const PovmElement& e);

// Protocol documents carry "schema_version": 1.
Protocol protocol_from_json(const Json& j);
Json protocol_to_json(const Protocol& p);

Json certificate_to_json(const MajorizationCertificate& cert);

}  // namespace locc
