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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "locc/errors.hpp"
#include "locc/json_io.hpp"
#include "locc/majorization.hpp"
#include "locc/protocol.hpp"
#include "locc/random_instance.hpp"
#include "locc/sim.hpp"

namespace py = pybind11;

namespace {

using namespace locc;

// Exact values cross the boundary as strings ("num/den" or decimal), never
// as binary floats.

WeightVector weights_in(const std::vector<std::string>& entries) {
    std::vector<Rational> parsed;
    parsed.reserve(entries.size());
    for (const std::string& e : entries) {
        parsed.push_back(Rational::parse(e));
    }
    return WeightVector(std::move(parsed));
}

std::vector<std::string> rationals_out(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& q : values) {
        out.push_back(q.to_string());
    }
    return out;
}

RationalMatrix matrix_in(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t n = rows.size();
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DimensionMismatch("matrix must be square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = Rational::parse(rows[i][j]);
        }
    }
    return m;
}

std::vector<std::vector<std::string>> matrix_out(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            rows[i].push_back(m.at(i, j).to_string());
        }
    }
    return rows;
}

BirkhoffDecomposition decomposition_in(
    const std::vector<std::pair<std::string, std::vector<long long>>>& terms) {
    BirkhoffDecomposition dec;
    for (const auto& [p, sigma] : terms) {
        dec.terms.push_back(
            BirkhoffTerm{Rational::parse(p), Permutation::from_one_based(sigma)});
    }
    return dec;
}

py::dict element_out(const PovmElement& e) {
    py::dict out;
    out["sigma"] = e.sigma.to_one_based();
    out["p"] = e.p.to_string();
    out["diag"] = rationals_out(e.diag);
    return out;
}

py::dict report_out(const SimulationReport& report) {
    py::list outcomes;
    for (const OutcomeReport& o : report.outcomes) {
        py::dict item;
        item["sigma"] = o.sigma.to_one_based();
        item["p_exact"] = o.p_exact.to_string();
        item["p_simulated"] = o.p_simulated;
        item["fidelity"] = o.post_correction_fidelity;
        outcomes.append(item);
    }
    py::dict out;
    out["outcomes"] = outcomes;
    out["probability_sum"] = report.probability_sum;
    out["ok"] = report.ok;
    return out;
}

}  // namespace

PYBIND11_MODULE(loccsynth, m) {
    m.doc() = "Synthesis, verification and simulation of single-measurement conversion "
              "protocols between bipartite pure states. Exact rationals travel as strings "
              "(\"num/den\" or decimal literals).";

    py::register_exception<NotMajorized>(m, "NotMajorizedError");
    py::register_exception<ParseError>(m, "ParseError");

    m.def(
        "majorizes",
        [](const std::vector<std::string>& beta, const std::vector<std::string>& alpha) {
            return majorizes(weights_in(beta), weights_in(alpha));
        },
        py::arg("beta"), py::arg("alpha"),
        "True iff beta majorizes alpha (conversion alpha -> beta is possible).");

    m.def(
        "majorization_certificate",
        [](const std::vector<std::string>& beta, const std::vector<std::string>& alpha) {
            const MajorizationCertificate cert =
                majorization_certificate(weights_in(beta), weights_in(alpha));
            py::list prefixes;
            for (const auto& row : cert.rows) {
                py::dict item;
                item["k"] = row.k;
                item["beta_prefix"] = row.beta_prefix.to_string();
                item["alpha_prefix"] = row.alpha_prefix.to_string();
                prefixes.append(item);
            }
            py::dict out;
            out["majorizes"] = cert.holds();
            out["prefixes"] = prefixes;
            out["first_violation"] =
                cert.first_violation ? py::cast(*cert.first_violation) : py::none();
            return out;
        },
        py::arg("beta"), py::arg("alpha"),
        "All prefix-sum pairs plus the first violating k, if any.");

    m.def(
        "build_transfer_matrix",
        [](const std::vector<std::string>& beta, const std::vector<std::string>& alpha) {
            return matrix_out(
                build_transfer_matrix(weights_in(beta), weights_in(alpha)).matrix());
        },
        py::arg("beta"), py::arg("alpha"),
        "A doubly stochastic matrix mapping beta to alpha.");

    m.def(
        "validate_transfer",
        [](const std::vector<std::vector<std::string>>& matrix,
           const std::vector<std::string>& beta, const std::vector<std::string>& alpha) {
            return validate_transfer(matrix_in(matrix), weights_in(beta), weights_in(alpha));
        },
        py::arg("matrix"), py::arg("beta"), py::arg("alpha"));

    m.def(
        "birkhoff_decompose",
        [](const std::vector<std::vector<std::string>>& matrix) {
            const BirkhoffDecomposition dec =
                birkhoff_decompose(BistochasticMatrix(matrix_in(matrix)));
            py::list out;
            for (const BirkhoffTerm& term : dec.terms) {
                py::dict item;
                item["p"] = term.p.to_string();
                item["sigma"] = term.sigma.to_one_based();
                out.append(item);
            }
            return out;
        },
        py::arg("matrix"),
        "Decompose a doubly stochastic matrix into weighted permutations "
        "(1-based image arrays).");

    m.def(
        "validate_decomposition",
        [](const std::vector<std::vector<std::string>>& matrix,
           const std::vector<std::pair<std::string, std::vector<long long>>>& terms) {
            return validate_decomposition(matrix_in(matrix), decomposition_in(terms));
        },
        py::arg("matrix"), py::arg("terms"));

    m.def(
        "random_majorizing_pair",
        [](std::size_t n, std::uint64_t seed) {
            const RandomInstance inst = random_majorizing_pair(n, seed);
            return py::make_tuple(rationals_out(inst.alpha.entries()),
                                  rationals_out(inst.beta.entries()));
        },
        py::arg("n"), py::arg("seed") = 0,
        "(alpha, beta) with beta majorizing alpha, deterministic in the seed.");

    py::class_<Protocol>(m, "Protocol")
        .def_static(
            "plan",
            [](const std::vector<std::string>& alpha, const std::vector<std::string>& beta) {
                return plan(weights_in(alpha), weights_in(beta));
            },
            py::arg("alpha"), py::arg("beta"),
            "Synthesize the conversion protocol from alpha to beta.")
        .def_property_readonly(
            "alpha", [](const Protocol& p) { return rationals_out(p.alpha.entries()); })
        .def_property_readonly(
            "beta", [](const Protocol& p) { return rationals_out(p.beta.entries()); })
        .def_property_readonly("transfer",
                               [](const Protocol& p) { return matrix_out(p.transfer); })
        .def_property_readonly("outcome_probabilities",
                               [](const Protocol& p) {
                                   std::vector<std::string> out;
                                   for (const PovmElement& e : p.elements) {
                                       out.push_back(e.p.to_string());
                                   }
                                   return out;
                               })
        .def_property_readonly("elements",
                               [](const Protocol& p) {
                                   py::list out;
                                   for (const PovmElement& e : p.elements) {
                                       out.append(element_out(e));
                                   }
                                   return out;
                               })
        .def("verify",
             [](const Protocol& p) {
                 const VerifyReport report = verify_protocol(p);
                 py::dict out;
                 out["ok"] = report.ok;
                 out["failures"] = report.failures;
                 return out;
             })
        .def("verify_converse",
             [](const Protocol& p) { return verify_converse(p.alpha, p.beta, p.elements); })
        .def(
            "simulate",
            [](const Protocol& p, std::size_t max_dimension) {
                return report_out(run_protocol_simulation(p, SimOptions{max_dimension}));
            },
            py::arg("max_dimension") = kDefaultMaxSimDimension)
        .def("to_json", [](const Protocol& p) { return serialize(p); })
        .def_static(
            "from_json", [](const std::string& text) { return deserialize(text); },
            py::arg("text"))
        .def("__eq__", [](const Protocol& a, const Protocol& b) { return a == b; })
        .def("__repr__", [](const Protocol& p) {
            return "<loccsynth.Protocol dimension=" + std::to_string(p.alpha.size()) +
                   " outcomes=" + std::to_string(p.elements.size()) + ">";
        });

    m.attr("__version__") = "0.1.0";
}
