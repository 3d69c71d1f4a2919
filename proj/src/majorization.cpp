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

#include "locc/majorization.hpp"

#include "locc/errors.hpp"

namespace locc {

bool majorizes(const WeightVector& beta, const WeightVector& alpha) {
    if (beta.size() != alpha.size()) {
        throw DimensionMismatch("majorization requires vectors of equal length");
    }
    const WeightVector b = sort_descending(beta).sorted;
    const WeightVector a = sort_descending(alpha).sorted;
    Rational beta_prefix;
    Rational alpha_prefix;
    for (std::size_t k = 0; k < b.size(); ++k) {
        beta_prefix += b[k];
        alpha_prefix += a[k];
        if (beta_prefix < alpha_prefix) {
            return false;
        }
    }
    return true;
}

MajorizationCertificate majorization_certificate(const WeightVector& beta,
                                                 const WeightVector& alpha) {
    if (beta.size() != alpha.size()) {
        throw DimensionMismatch("majorization requires vectors of equal length");
    }
    const WeightVector b = sort_descending(beta).sorted;
    const WeightVector a = sort_descending(alpha).sorted;
    MajorizationCertificate cert;
    Rational beta_prefix;
    Rational alpha_prefix;
    for (std::size_t k = 0; k < b.size(); ++k) {
        beta_prefix += b[k];
        alpha_prefix += a[k];
        cert.rows.push_back({k + 1, beta_prefix, alpha_prefix});
        if (!cert.first_violation && beta_prefix < alpha_prefix) {
            cert.first_violation = k + 1;
        }
    }
    return cert;
}

}  // namespace locc
