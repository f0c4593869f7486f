"""Channels: dense semantics, Heisenberg duality, and the exact-coefficient
identity against a brute-force stabilizer average."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpsqlab.channels import (
    DepolarizingChannel,
    NoisyUnitaryChannel,
    PauliSpikeChannel,
    UnitaryChannel,
    apply,
    channel_from_config,
    exact_pauli_coefficient,
    heisenberg_adjoint,
    load_unitary,
    save_unitary,
)
from qpsqlab.ensembles import haar_unitary
from qpsqlab.paulis import Observable, PauliString, enumerate_low_degree
from qpsqlab.states import (
    STAB_LABELS,
    DensityMatrix,
    StabilizerProductState,
    density_of,
    expectation,
    stab_expectation,
)


def random_density(n, rng):
    d = 1 << n
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    m = a @ a.conj().T
    return DensityMatrix(n, m / np.trace(m))


def _channels_for(n, rng):
    u = haar_unitary(n, rng)
    p = PauliString.single(n, 0, "X")
    return [
        UnitaryChannel(u),
        DepolarizingChannel(n),
        PauliSpikeChannel(0.25, p),
        NoisyUnitaryChannel(u, 0.3),
    ]


def test_unitary_channel_conjugates(rng):
    u = haar_unitary(2, rng)
    c = UnitaryChannel(u)
    rho = random_density(2, rng)
    assert np.allclose(c.apply_mat(rho.mat), u @ rho.mat @ u.conj().T)
    o = np.diag([1.0, -1.0, 1.0, -1.0]).astype(complex)
    assert np.allclose(c.adjoint_mat(o), u.conj().T @ o @ u)


def test_unitary_channel_requires_unitarity():
    with pytest.raises(ValueError):
        UnitaryChannel(np.array([[1.0, 0.0], [0.0, 2.0]], dtype=complex))


def test_depolarizing_forgets_input(rng):
    c = DepolarizingChannel(2)
    rho = random_density(2, rng)
    assert np.allclose(c.apply_mat(rho.mat), np.eye(4) / 4)
    o = rng.normal(size=(4, 4))
    o = o + o.T
    adj = c.adjoint_mat(o.astype(complex))
    assert np.allclose(adj, np.trace(o) / 4 * np.eye(4))


def test_spike_output_and_domain(rng):
    p = PauliString.from_label("ZZ")
    c = PauliSpikeChannel(0.25, p)
    rho = random_density(2, rng)
    want = (np.eye(4) + 0.75 * p.to_matrix()) / 4
    assert np.allclose(c.apply_mat(rho.mat), want)
    for eps in (0.0, -0.1, 0.34, 1.0):
        with pytest.raises(ValueError):
            PauliSpikeChannel(eps, p)
    with pytest.raises(ValueError):
        PauliSpikeChannel(0.25, PauliString.identity(2))


def test_spike_probe_identity_exhaustive(rng):
    # tr(Q spike_{eps,P}(rho)) = 3 eps [P == Q], all degree<=2 pairs at n=2
    eps = 1.0 / 3.0
    rho = random_density(2, rng)
    paulis = [p for p in enumerate_low_degree(2, 2) if p.degree > 0]
    for p in paulis:
        out = PauliSpikeChannel(eps, p).apply_mat(rho.mat)
        for q in paulis:
            want = 3 * eps if p == q else 0.0
            got = np.trace(q.to_matrix() @ out).real
            assert got == pytest.approx(want, abs=1e-12)


def test_noisy_unitary_limits(rng):
    u = haar_unitary(2, rng)
    rho = random_density(2, rng)
    almost_unitary = NoisyUnitaryChannel(u, 0.0)
    assert np.allclose(almost_unitary.apply_mat(rho.mat), u @ rho.mat @ u.conj().T)
    fully_mixed = NoisyUnitaryChannel(u, 1.0)
    assert np.allclose(fully_mixed.apply_mat(rho.mat), np.eye(4) / 4)
    with pytest.raises(ValueError):
        NoisyUnitaryChannel(u, 1.5)
    with pytest.raises(ValueError):
        NoisyUnitaryChannel(u, -0.1)


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1), st.integers(0, 3))
def test_heisenberg_duality(seed, which):
    # tr(O E(rho)) == tr(E+(O) rho) for every channel kind
    rng = np.random.default_rng(seed)
    n = 2
    c = _channels_for(n, rng)[which]
    rho = random_density(n, rng)
    o = Observable.from_terms(
        [(0.6, PauliString.from_label("ZI")), (0.4, PauliString.from_label("XY"))]
    )
    lhs = expectation(o, apply(c, rho))
    rhs = np.trace(heisenberg_adjoint(c, o) @ rho.mat).real
    assert lhs == pytest.approx(rhs, abs=1e-10)


def test_apply_returns_valid_density(rng):
    c = DepolarizingChannel(2)
    out = apply(c, random_density(2, rng))
    assert isinstance(out, DensityMatrix)
    assert np.trace(out.mat).real == pytest.approx(1.0)


def brute_force_coefficient(c, o, p):
    """Exhaustive stabilizer-mean identity, written out independently:
    (1/3^{|P|}) alpha_P = E_s[ tr(P rho_s) tr(O E(rho_s)) ] over all 6^n
    product states."""
    n = c.n
    acc = 0.0
    count = 0
    for labels in itertools.product(STAB_LABELS, repeat=n):
        s = StabilizerProductState(labels)
        rho = density_of(s)
        acc += stab_expectation(p, s) * expectation(o, apply(c, rho))
        count += 1
    return (3.0**p.degree) * acc / count


def test_exact_coefficient_matches_brute_force(rng):
    u = haar_unitary(2, rng)
    c = UnitaryChannel(u)
    o = Observable.from_terms(
        [(0.7, PauliString.from_label("ZI")), (0.3, PauliString.from_label("XX"))]
    )
    for p in enumerate_low_degree(2, 2):
        want = brute_force_coefficient(c, o, p)
        got = exact_pauli_coefficient(c, o, p)
        assert got == pytest.approx(want, abs=1e-10), p.label


def test_exact_coefficient_spike_direction():
    p = PauliString.from_label("XZ")
    c = PauliSpikeChannel(0.2, p)
    o = Observable.single_pauli(p)
    assert exact_pauli_coefficient(c, o, PauliString.identity(2)) == pytest.approx(0.6)
    assert exact_pauli_coefficient(c, o, p) == pytest.approx(0.0, abs=1e-12)


def test_unitary_file_roundtrip(tmp_path, rng):
    u = haar_unitary(2, rng)
    path = tmp_path / "u.json"
    save_unitary(str(path), u)
    assert np.allclose(load_unitary(str(path)), u, atol=1e-15)
    c = channel_from_config({"kind": "file", "path": str(path)}, 2, rng)
    assert isinstance(c, UnitaryChannel)
    with pytest.raises(ValueError):
        channel_from_config({"kind": "file", "path": str(path)}, 3, rng)


def test_channel_from_config_kinds(rng):
    assert isinstance(channel_from_config({"kind": "haar"}, 2, rng), UnitaryChannel)
    assert isinstance(channel_from_config({"kind": "clifford"}, 2, rng), UnitaryChannel)
    assert isinstance(
        channel_from_config({"kind": "depolarizing"}, 2, rng), DepolarizingChannel
    )
    sp = channel_from_config({"kind": "spike", "epsilon": 0.25, "pauli": "ZZ"}, 2, rng)
    assert isinstance(sp, PauliSpikeChannel)
    noisy = channel_from_config({"kind": "haar", "noise": 0.2}, 2, rng)
    assert isinstance(noisy, NoisyUnitaryChannel)


def test_channel_from_config_errors(rng):
    with pytest.raises(ValueError):
        channel_from_config({"kind": "teleport"}, 2, rng)
    with pytest.raises(ValueError):
        channel_from_config({"kind": "depolarizing", "noise": 0.2}, 2, rng)
    with pytest.raises(ValueError):
        channel_from_config({"kind": "spike", "epsilon": 0.2, "pauli": "Z"}, 2, rng)
