# Copyright 2026 The quadqaoa Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python bindings."""

import itertools
import json
import math

import pytest

import quadqaoa as qq


def sidelobe_energy(n, bits):
    spins = [1 - 2 * ((bits >> i) & 1) for i in range(n)]
    total = sum(
        sum(spins[i] * spins[i + k] for i in range(n - k)) ** 2 for k in range(1, n))
    return (total - n * (n - 1) / 2) / 2


def test_labs_term_counts_and_energy():
    h = qq.labs(16)
    assert h.count_terms_of_degree(4) == 252
    assert h.count_terms_of_degree(2) == 56
    small = qq.labs(7)
    for bits in range(1 << 7):
        assert small.energy(bits) == pytest.approx(sidelobe_energy(7, bits))


def test_polynomial_round_trip():
    h = qq.Polynomial(3, {(0, 1): 0.5, (2,): -1.0}, 0.25)
    assert h.terms == {(0, 1): 0.5, (2,): -1.0}
    assert json.loads(h.to_json())["n"] == 3
    assert qq.Polynomial.from_json(h.to_json()) == h
    with pytest.raises(qq.Error):
        h.add_term([0, 7], 1.0)


def test_clique_expansion_weights():
    h = qq.Polynomial(4, {(0, 1, 2, 3): 1.0})
    quadratic, weights = qq.clique_expand(h)
    assert quadratic.degree == 2
    assert weights == {p: pytest.approx(1.0) for p in itertools.combinations(range(4), 2)}


def test_resources_and_routing():
    est = qq.resources(qq.labs(16))
    assert est["two_qubit_gate_count"] == 1624
    qubo = qq.resources(qq.qubo_full(16, value=1.0))
    assert (qubo["two_qubit_gate_count"], qubo["two_qubit_depth"]) == (240, 30)
    assert len(qq.reachable_pairs(8, 6)) == 28
    assert len(qq.reachable_pairs(8, 0)) == 7


def test_train_and_sample_single_edge():
    h = qq.Polynomial(2, {(0, 1): 1.0})
    trained = qq.train(h, p=1)
    assert trained.energy == pytest.approx(-1.0, abs=1e-6)
    samples = qq.sample(h, trained, shots=200, seed=1)
    assert samples.total_shots == 200
    assert samples.mean_energy() == pytest.approx(-1.0)


def test_pipeline_on_maxcut():
    edges = qq.random_regular_graph(8, 3, seed=2)
    assert len(edges) == 12
    h = qq.maxcut(8, edges)
    spec = qq.spectrum(h)
    trained = qq.train(h, ansatz="truncated", p=1, k=2, maxiter=100, seed=1)
    samples = qq.sample(h, trained, shots=2000, seed=3)
    r = qq.approximation_ratio(samples.mean_energy(), spec["e_min"], spec["e_max"])
    assert 0.5 < r <= 1.0
    assert qq.cvar_ratio(samples, 0.1, spec["e_min"], spec["e_max"]) >= r
    assert not math.isnan(qq.best_fraction_mean(samples, 0.1))


def test_alpha_theoretical_without_errors():
    assert qq.alpha_theoretical(4, 2, [0.0] * 7, 8) == 1.0
    assert qq.alpha_theoretical(4, 2, [1e-2] * 7, 8) < 1.0


def test_cli_passthrough(tmp_path):
    code, out, err = qq.cli(["build", "labs", "--n", "6", "--out", str(tmp_path / "p.json")])
    assert code == 0, err
    assert qq.Polynomial.from_json((tmp_path / "p.json").read_text()) == qq.labs(6)
    code, _, err = qq.cli(["build", "nothing"])
    assert code != 0
