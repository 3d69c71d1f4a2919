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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "locc/errors.hpp"
#include "locc/json_io.hpp"
#include "locc/majorization.hpp"
#include "locc/protocol.hpp"
#include "locc/random_instance.hpp"
#include "locc/sim.hpp"

namespace {

using namespace locc;

// Exit codes: 0 success, 1 negative mathematical result, 2 input error.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    out << text;
}

WeightVector load_weight_vector(const std::string& path) {
    return weight_vector_from_json(parse_json_text(read_text(path)));
}

WeightVector zero_pad(const WeightVector& v, std::size_t n) {
    std::vector<Rational> entries = v.entries();
    entries.resize(n, Rational(0));
    return WeightVector(std::move(entries));
}

// Unequal lengths are an error unless padding was requested explicitly.
void pad_to_match(WeightVector& alpha, WeightVector& beta, bool pad) {
    if (!pad || alpha.size() == beta.size()) {
        return;
    }
    const std::size_t n = std::max(alpha.size(), beta.size());
    alpha = zero_pad(alpha, n);
    beta = zero_pad(beta, n);
}

std::string render_vector(const std::vector<Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += values[i].to_string();
    }
    return out + ")";
}

void print_matrix(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::string line = "  [";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) {
                line += ", ";
            }
            line += m.at(i, j).to_string();
        }
        std::cout << line << "]\n";
    }
}

int run_check(const std::string& alpha_path, const std::string& beta_path, bool pad,
              bool as_json) {
    WeightVector alpha = load_weight_vector(alpha_path);
    WeightVector beta = load_weight_vector(beta_path);
    pad_to_match(alpha, beta, pad);
    const MajorizationCertificate cert = majorization_certificate(beta, alpha);
    if (as_json) {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else if (cert.holds()) {
        std::cout << "MAJORIZES\n";
        for (const auto& row : cert.rows) {
            std::cout << "  k=" << row.k << ": " << row.beta_prefix << " >= "
                      << row.alpha_prefix << "\n";
        }
    } else {
        const auto& bad = cert.rows[*cert.first_violation - 1];
        std::cout << "NOT MAJORIZED\n";
        std::cout << "  first violation at k=" << bad.k << ": " << bad.beta_prefix << " < "
                  << bad.alpha_prefix << "\n";
    }
    return cert.holds() ? kExitOk : kExitNegative;
}

int run_plan(const std::string& alpha_path, const std::string& beta_path,
             const std::string& out_path, bool pad, bool explain, bool as_json) {
    WeightVector alpha = load_weight_vector(alpha_path);
    WeightVector beta = load_weight_vector(beta_path);
    pad_to_match(alpha, beta, pad);

    PlanTrace trace;
    std::optional<Protocol> planned;
    try {
        planned.emplace(plan(alpha, beta, explain ? &trace : nullptr));
    } catch (const NotMajorized&) {
        std::cout << "NOT MAJORIZED\n";
        return kExitNegative;
    }
    const Protocol& protocol = *planned;

    if (explain) {
        std::cout << "transfer chain (" << trace.transfer_chain.size() << " steps):\n";
        for (const TTransform& t : trace.transfer_chain) {
            std::cout << "  mix sorted coordinates " << (t.j + 1) << " and " << (t.k + 1)
                      << " with t = " << t.t << "\n";
        }
        std::cout << "peel order:\n";
        for (const BirkhoffTerm& term : protocol.decomposition.terms) {
            std::cout << "  subtract " << term.p << " x " << term.sigma.to_cycle_string()
                      << "\n";
        }
    }

    const std::string text = serialize(protocol);
    if (!out_path.empty()) {
        write_text(out_path, text);
    }
    if (as_json || out_path.empty()) {
        std::cout << text;
    } else {
        std::cout << "protocol with " << protocol.elements.size() << " outcomes";
        std::string probs;
        for (const PovmElement& e : protocol.elements) {
            probs += probs.empty() ? "" : ", ";
            probs += e.p.to_string();
        }
        std::cout << ", probabilities {" << probs << "}\n";
        std::cout << "written to " << out_path << "\n";
    }
    return kExitOk;
}

int run_decompose(const std::string& matrix_path, const std::string& out_path) {
    const RationalMatrix m = matrix_from_json(parse_json_text(read_text(matrix_path)));
    const BistochasticMatrix d(m);  // rejects non-bistochastic input
    const BirkhoffDecomposition dec = birkhoff_decompose(d);
    const std::string text = decomposition_to_json(dec).dump(2) + "\n";
    write_text(out_path.empty() ? "-" : out_path, text);
    return kExitOk;
}

int run_verify(const std::string& protocol_path, bool converse, bool as_json) {
    const Protocol protocol = deserialize(read_text(protocol_path));
    const VerifyReport report = verify_protocol(protocol);

    bool converse_ok = true;
    if (converse) {
        converse_ok = verify_converse(protocol.alpha, protocol.beta, protocol.elements);
    }

    if (as_json) {
        Json out{{"ok", report.ok}, {"failures", report.failures}};
        if (converse) {
            out["converse_ok"] = converse_ok;
            if (converse_ok) {
                out["gamma"] = matrix_to_json(gamma_from_povm(protocol.elements).matrix());
            }
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (report.ok) {
            std::cout << "protocol OK: " << protocol.elements.size() << " outcomes, dimension "
                      << protocol.alpha.size() << "\n";
        } else {
            std::cout << "protocol INVALID, failing checks:";
            for (const std::string& name : report.failures) {
                std::cout << " " << name;
            }
            std::cout << "\n";
        }
        if (converse) {
            std::cout << "converse " << (converse_ok ? "OK" : "FAILED") << "\n";
            if (converse_ok) {
                std::cout << "gamma:\n";
                print_matrix(gamma_from_povm(protocol.elements).matrix());
            }
        }
    }
    return (report.ok && converse_ok) ? kExitOk : kExitNegative;
}

int run_simulate(const std::string& protocol_path, bool as_json, std::size_t max_n) {
    const Protocol protocol = deserialize(read_text(protocol_path));
    if (!verify_protocol(protocol).ok) {
        std::cout << "protocol INVALID; refusing to simulate\n";
        return kExitNegative;
    }
    SimOptions options;
    if (max_n > 0) {
        options.max_dimension = max_n;
    }
    std::optional<SimulationReport> simulated;
    try {
        simulated.emplace(run_protocol_simulation(protocol, options));
    } catch (const ZeroProbabilityOutcome&) {
        // A valid protocol can carry a branch whose probability is below the
        // simulator's floating-point floor; the exact checkers still apply.
        std::cout << "SIMULATION FAILED: an outcome probability is below the "
                  << kZeroProbability << " floor of the float path\n";
        return kExitNegative;
    }
    const SimulationReport& report = *simulated;

    if (as_json) {
        Json outcomes = Json::array();
        for (const OutcomeReport& o : report.outcomes) {
            outcomes.push_back(Json{{"sigma", permutation_to_json(o.sigma)},
                                    {"p_exact", rational_to_json(o.p_exact)},
                                    {"p_simulated", o.p_simulated},
                                    {"fidelity", o.post_correction_fidelity}});
        }
        const Json out{{"outcomes", std::move(outcomes)},
                       {"probability_sum", report.probability_sum},
                       {"ok", report.ok}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const OutcomeReport& o : report.outcomes) {
            std::cout << "outcome " << o.sigma.to_cycle_string() << ": p_exact=" << o.p_exact
                      << " p_simulated=" << o.p_simulated
                      << " fidelity=" << o.post_correction_fidelity
                      << (o.probability_ok && o.fidelity_ok ? "" : "  <-- MISMATCH") << "\n";
        }
        std::cout << "probability sum = " << report.probability_sum << "\n";
        std::cout << (report.ok ? "SIMULATION OK" : "SIMULATION FAILED") << "\n";
    }
    return report.ok ? kExitOk : kExitNegative;
}

int run_random_instance(std::size_t n, std::uint64_t seed, const std::string& alpha_path,
                        const std::string& beta_path, bool as_json) {
    const RandomInstance inst = random_majorizing_pair(n, seed);
    const std::string alpha_text = weight_vector_to_json(inst.alpha).dump() + "\n";
    const std::string beta_text = weight_vector_to_json(inst.beta).dump() + "\n";
    write_text(alpha_path, alpha_text);
    write_text(beta_path, beta_text);
    if (as_json) {
        std::cout << Json{{"alpha", weight_vector_to_json(inst.alpha)},
                          {"beta", weight_vector_to_json(inst.beta)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "alpha = " << render_vector(inst.alpha.entries()) << " -> " << alpha_path
                  << "\n";
        std::cout << "beta  = " << render_vector(inst.beta.entries()) << " -> " << beta_path
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesis, verification and simulation of single-measurement conversion "
                 "protocols between bipartite pure states, given exact Schmidt weights."};
    app.require_subcommand(1);

    std::string alpha_path;
    std::string beta_path;
    std::string protocol_path;
    std::string matrix_path;
    std::string out_path;
    std::string out_alpha = "alpha.json";
    std::string out_beta = "beta.json";
    bool as_json = false;
    bool pad = false;
    bool explain = false;
    bool converse = false;
    std::size_t instance_n = 0;
    std::uint64_t seed = 0;
    std::size_t max_n = 0;

    auto* check = app.add_subcommand(
        "check", "Decide whether the target weights majorize the source weights");
    check->add_option("alpha", alpha_path, "source weight vector (JSON)")->required();
    check->add_option("beta", beta_path, "target weight vector (JSON)")->required();
    check->add_flag("--pad", pad, "zero-pad the shorter vector instead of erroring");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* plan_cmd = app.add_subcommand("plan", "Synthesize a conversion protocol");
    plan_cmd->add_option("alpha", alpha_path, "source weight vector (JSON)")->required();
    plan_cmd->add_option("beta", beta_path, "target weight vector (JSON)")->required();
    plan_cmd->add_option("--out", out_path, "write the protocol JSON here");
    plan_cmd->add_flag("--pad", pad, "zero-pad the shorter vector instead of erroring");
    plan_cmd->add_flag("--explain", explain, "print the transfer chain and peel order");
    plan_cmd->add_flag("--json", as_json, "print the protocol JSON to stdout");

    auto* decompose = app.add_subcommand(
        "decompose", "Decompose a doubly stochastic matrix into permutation matrices");
    decompose->add_option("matrix", matrix_path, "matrix file (JSON, row-major)")->required();
    decompose->add_option("--out", out_path, "write the decomposition JSON here");

    auto* verify = app.add_subcommand("verify", "Re-check every invariant of a protocol file");
    verify->add_option("protocol", protocol_path, "protocol file (JSON)")->required();
    verify->add_flag("--converse", converse, "also run the converse certifier and print gamma");
    verify->add_flag("--json", as_json, "machine-readable output");

    auto* simulate =
        app.add_subcommand("simulate", "Execute a protocol as a state-vector simulation");
    simulate->add_option("protocol", protocol_path, "protocol file (JSON)")->required();
    simulate->add_flag("--json", as_json, "machine-readable output");
    simulate->add_option("--max-n", max_n, "override the simulation size guard");

    auto* random_instance = app.add_subcommand(
        "random-instance", "Generate a random conversion-feasible weight vector pair");
    random_instance->add_option("n", instance_n, "vector length (>= 1)")->required();
    random_instance->add_option("--seed", seed, "PRNG seed")->default_val(0);
    random_instance->add_option("--out-alpha", out_alpha, "alpha output path");
    random_instance->add_option("--out-beta", out_beta, "beta output path");
    random_instance->add_flag("--json", as_json, "also print the pair to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(check)) {
            return run_check(alpha_path, beta_path, pad, as_json);
        }
        if (app.got_subcommand(plan_cmd)) {
            return run_plan(alpha_path, beta_path, out_path, pad, explain, as_json);
        }
        if (app.got_subcommand(decompose)) {
            return run_decompose(matrix_path, out_path);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(protocol_path, converse, as_json);
        }
        if (app.got_subcommand(simulate)) {
            return run_simulate(protocol_path, as_json, max_n);
        }
        if (app.got_subcommand(random_instance)) {
            if (instance_n == 0) {
                std::cerr << "error: n must be at least 1\n";
                return kExitInputError;
            }
            return run_random_instance(instance_n, seed, out_alpha, out_beta, as_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
