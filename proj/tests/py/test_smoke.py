# Copyright 2026 The loccsynth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import loccsynth

ALPHA = ["2/5", "1/4", "7/20"]
BETA = ["3/5", "3/10", "1/10"]


def test_majorizes():
    assert loccsynth.majorizes(BETA, ALPHA)
    assert loccsynth.majorizes(ALPHA, ALPHA)
    assert not loccsynth.majorizes(["1/3", "1/3", "1/3"], ["1/2", "1/4", "1/4"])


def test_certificate():
    cert = loccsynth.majorization_certificate(BETA, ALPHA)
    assert cert["majorizes"]
    assert cert["first_violation"] is None
    assert cert["prefixes"][0]["beta_prefix"] == "3/5"

    bad = loccsynth.majorization_certificate(["1/3", "1/3", "1/3"], ["1", "0", "0"])
    assert bad["first_violation"] == 1


def test_plan_verify_simulate():
    protocol = loccsynth.Protocol.plan(ALPHA, BETA)
    assert protocol.alpha == ["2/5", "1/4", "7/20"]
    assert protocol.beta == ["3/5", "3/10", "1/10"]

    total = sum(Fraction(p) for p in protocol.outcome_probabilities)
    assert total == 1

    report = protocol.verify()
    assert report["ok"]
    assert report["failures"] == []
    assert protocol.verify_converse()

    sim = protocol.simulate()
    assert sim["ok"]
    assert abs(sim["probability_sum"] - 1.0) < 1e-12
    for outcome in sim["outcomes"]:
        assert abs(outcome["p_simulated"] - Fraction(outcome["p_exact"])) < 1e-12
        assert outcome["fidelity"] >= 1 - 1e-10


def test_json_round_trip():
    protocol = loccsynth.Protocol.plan(ALPHA, BETA)
    again = loccsynth.Protocol.from_json(protocol.to_json())
    assert again == protocol


def test_not_majorized_raises():
    with pytest.raises(loccsynth.NotMajorizedError):
        loccsynth.Protocol.plan(["1/2", "1/4", "1/4"], ["1/3", "1/3", "1/3"])


def test_parse_error():
    with pytest.raises(loccsynth.ParseError):
        loccsynth.Protocol.from_json("{")
    with pytest.raises(loccsynth.ParseError):
        loccsynth.majorizes(["1/0", "0", "0"], ["1", "0", "0"])


def test_transfer_and_decomposition():
    matrix = loccsynth.build_transfer_matrix(BETA, ALPHA)
    assert loccsynth.validate_transfer(matrix, BETA, ALPHA)

    terms = loccsynth.birkhoff_decompose(matrix)
    assert loccsynth.validate_decomposition(
        matrix, [(t["p"], t["sigma"]) for t in terms]
    )
    assert sum(Fraction(t["p"]) for t in terms) == 1

    flat = [["1/2", "1/2"], ["1/2", "1/2"]]
    weights = sorted(t["p"] for t in loccsynth.birkhoff_decompose(flat))
    assert weights == ["1/2", "1/2"]


def test_random_pair():
    alpha, beta = loccsynth.random_majorizing_pair(6, seed=42)
    assert loccsynth.majorizes(beta, alpha)
    assert loccsynth.random_majorizing_pair(6, seed=42) == (alpha, beta)
