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

#include "locc/json_io.hpp"

#include "locc/errors.hpp"
#include "locc/protocol.hpp"

namespace locc {

namespace {

constexpr int kSchemaVersion = 1;

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());  // nlohmann reports the byte offset
    }
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw ParseError("expected an exact rational as \"num/den\", decimal string or integer, got " +
                     j.dump());
}

Json rational_to_json(const Rational& q) { return q.to_string(); }

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected a JSON array of rationals, got " + j.dump());
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const Json& item : j) {
        out.push_back(rational_from_json(item));
    }
    return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& q : values) {
        out.push_back(rational_to_json(q));
    }
    return out;
}

WeightVector weight_vector_from_json(const Json& j) {
    return WeightVector(rationals_from_json(j));
}

Json weight_vector_to_json(const WeightVector& v) { return rationals_to_json(v.entries()); }

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("expected a nonempty JSON array of matrix rows");
    }
    const std::size_t n = j.size();
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Rational> row = rationals_from_json(j.at(i));
        if (row.size() != n) {
            throw ParseError("matrix rows must all have the same length as the row count");
        }
        for (std::size_t c = 0; c < n; ++c) {
            m.at(i, c) = row[c];
        }
    }
    return m;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) {
            row.push_back(rational_to_json(m.at(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Permutation permutation_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("expected a nonempty JSON array of 1-based permutation images");
    }
    std::vector<long long> images;
    images.reserve(j.size());
    for (const Json& item : j) {
        if (!item.is_number_integer()) {
            throw ParseError("permutation images must be integers, got " + item.dump());
        }
        images.push_back(item.get<long long>());
    }
    return Permutation::from_one_based(images);
}

Json permutation_to_json(const Permutation& sigma) {
    return Json(sigma.to_one_based());
}

BirkhoffDecomposition decomposition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected a JSON array of decomposition terms");
    }
    BirkhoffDecomposition dec;
    for (const Json& item : j) {
        dec.terms.push_back(BirkhoffTerm{rational_from_json(require_field(item, "p")),
                                         permutation_from_json(require_field(item, "sigma"))});
    }
    return dec;
}

Json decomposition_to_json(const BirkhoffDecomposition& dec) {
    Json out = Json::array();
    for (const BirkhoffTerm& term : dec.terms) {
        out.push_back(Json{{"p", rational_to_json(term.p)},
                           {"sigma", permutation_to_json(term.sigma)}});
    }
    return out;
}

PovmElement element_from_json(const Json& j) {
    return PovmElement{permutation_from_json(require_field(j, "sigma")),
                       rationals_from_json(require_field(j, "diag")),
                       rational_from_json(require_field(j, "p"))};
}

Json element_to_json(const PovmElement& e) {
    return Json{{"sigma", permutation_to_json(e.sigma)},
                {"p", rational_to_json(e.p)},
                {"diag", rationals_to_json(e.diag)}};
}

Protocol protocol_from_json(const Json& j) {
    const Json& version = require_field(j, "schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw ParseError("unsupported schema_version: " + version.dump());
    }
    Protocol p{weight_vector_from_json(require_field(j, "alpha")),
               weight_vector_from_json(require_field(j, "beta")),
               matrix_from_json(require_field(j, "transfer")),
               decomposition_from_json(require_field(j, "decomposition")),
               {}};
    const Json& elements = require_field(j, "elements");
    if (!elements.is_array()) {
        throw ParseError("\"elements\" must be a JSON array");
    }
    for (const Json& item : elements) {
        p.elements.push_back(element_from_json(item));
    }
    return p;
}

Json protocol_to_json(const Protocol& p) {
    Json elements = Json::array();
    for (const PovmElement& e : p.elements) {
        elements.push_back(element_to_json(e));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"alpha", weight_vector_to_json(p.alpha)},
                {"beta", weight_vector_to_json(p.beta)},
                {"transfer", matrix_to_json(p.transfer)},
                {"decomposition", decomposition_to_json(p.decomposition)},
                {"elements", std::move(elements)}};
}

Json certificate_to_json(const MajorizationCertificate& cert) {
    Json rows = Json::array();
    for (const auto& row : cert.rows) {
        rows.push_back(Json{{"k", row.k},
                            {"beta_prefix", rational_to_json(row.beta_prefix)},
                            {"alpha_prefix", rational_to_json(row.alpha_prefix)}});
    }
    Json out{{"majorizes", cert.holds()}, {"prefixes", std::move(rows)}};
    out["first_violation"] =
        cert.first_violation ? Json(*cert.first_violation) : Json(nullptr);
    return out;
}

}  // namespace locc
