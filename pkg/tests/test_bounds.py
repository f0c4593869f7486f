"""Moment, concentration, and spike experiments over the random ensembles."""

import math

import numpy as np
import pytest

from qpsqlab.bounds import (
    CheckResult,
    ExperimentReport,
    concentration_experiment,
    ensemble_expectations,
    mean_channel_check,
    spike_distinguish_check,
    variance_experiment,
)
from qpsqlab.ensembles import haar_unitary, random_pauli
from qpsqlab.paulis import PauliString, enumerate_low_degree


def make_pairs(n, count, seed=0):
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(count):
        psi = haar_unitary(n, rng)[:, 0]
        pairs.append((psi, random_pauli(n, rng)))
    return pairs


def test_ensemble_expectations_shape_and_range(rng):
    pairs = make_pairs(2, 3)
    vals = ensemble_expectations("clifford", 2, pairs, 100, rng)
    assert vals.shape == (3, 100)
    assert np.all(np.abs(vals) <= 1.0 + 1e-12)


def test_ensemble_expectations_job_count_invariance():
    pairs = make_pairs(2, 2)
    a = ensemble_expectations("haar", 2, pairs, 5000, np.random.default_rng(4), jobs=1)
    b = ensemble_expectations("haar", 2, pairs, 5000, np.random.default_rng(4), jobs=2)
    np.testing.assert_array_equal(a, b)


def test_ensemble_expectations_validation(rng):
    pairs = make_pairs(1, 1)
    with pytest.raises(ValueError):
        ensemble_expectations("haar", 1, pairs, 0, rng)
    with pytest.raises(ValueError):
        ensemble_expectations("brownian", 1, pairs, 10, rng)


def test_variance_experiment_clifford_passes(rng):
    rep = variance_experiment("clifford", 2, make_pairs(2, 4), 4000, rng)
    assert len(rep.checks) == 4
    assert rep.all_passed
    for c in rep.checks:
        assert c.bound == pytest.approx(1.0 / 5.0)
        assert c.experiment == "variance"
        # two-design variance is close to the bound but does not blow past it
        assert c.estimate <= c.bound + 3.0 * (c.ci_high - c.ci_low) / 2.0


def test_variance_experiment_inconclusive_single_sample(rng):
    rep = variance_experiment("haar", 1, make_pairs(1, 2), 1, rng)
    assert all(c.verdict == "inconclusive" for c in rep.checks)
    assert not rep.all_passed


def test_variance_bound_values():
    # the bound column is 1/(2^n + 1)
    rng = np.random.default_rng(0)
    for n, want in ((1, 1 / 3), (2, 1 / 5), (3, 1 / 9)):
        rep = variance_experiment("haar", n, make_pairs(n, 1), 50, rng)
        assert rep.checks[0].bound == pytest.approx(want)


def test_concentration_experiment_rows(rng):
    rep = concentration_experiment([1, 2, 3], 0.5, 3000, rng)
    # one row per n plus the monotonicity row
    assert len(rep.checks) == 4
    assert rep.all_passed
    tail = rep.checks[-1]
    assert "monotone" in tail.detail
    for c, n in zip(rep.checks, (1, 2, 3)):
        want = 2.0 * math.exp(-((1 << n) * 0.25) / 48.0)
        assert c.bound == pytest.approx(want)
    # frozen bound at n=4, tau=0.5: 2 exp(-1/12)
    rep4 = concentration_experiment([4], 0.5, 500, rng)
    assert rep4.checks[0].bound == pytest.approx(1.8401, abs=5e-5)


def test_concentration_validation(rng):
    with pytest.raises(ValueError):
        concentration_experiment([], 0.5, 100, rng)
    with pytest.raises(ValueError):
        concentration_experiment([1], 0.0, 100, rng)


def test_mean_channel_check_passes_both_ensembles(rng):
    for kind in ("haar", "clifford"):
        rep = mean_channel_check(kind, 2, 6000, rng)
        (c,) = rep.checks
        assert c.verdict == "pass", (kind, c)
        assert c.experiment == "mean-channel"


def test_mean_channel_single_sample_inconclusive(rng):
    rep = mean_channel_check("haar", 1, 1, rng)
    assert rep.checks[0].verdict == "inconclusive"
    with pytest.raises(ValueError):
        mean_channel_check("haar", 1, 0, rng)


def test_spike_distinguish_all_pass(rng):
    paulis = enumerate_low_degree(2, 2)
    rep = spike_distinguish_check(2, 0.25, paulis, rng, n_states=5)
    assert rep.all_passed
    directions = [p for p in paulis if p.degree > 0]
    # one row per (direction, probe) plus one depolarizing row per probe
    assert len(rep.checks) == len(directions) ** 2 + len(directions)
    for c in rep.checks:
        assert c.estimate <= 1e-10


def test_check_result_passed_property():
    ok = CheckResult("variance", "haar", 1, "", 0.1, 0.5, 0.0, 0.2, "pass")
    bad = CheckResult("variance", "haar", 1, "", 0.9, 0.5, 0.8, 1.0, "fail")
    assert ok.passed and not bad.passed
    rep = ExperimentReport((ok,)).merged(ExperimentReport((bad,)))
    assert len(rep.checks) == 2
    assert not rep.all_passed
