"""Quantum channels and their Heisenberg adjoints, dense at desk scale.

Four variants: a unitary conjugation, the fully depolarizing channel, a
"spike" channel whose fixed output is (I + 3 eps P)/2^n for a chosen Pauli P,
and a unitary mixed with depolarizing noise.  Spike channels are the
distinguishing instances used by the lower-bound experiments: their output
overlaps one designated Pauli direction and nothing else.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .paulis import Observable, PauliString, pauli_expectation, _check_dense, _dense_pauli
from .states import DensityMatrix


@dataclass(frozen=True, eq=False)
class UnitaryChannel:
    u: np.ndarray

    def __post_init__(self):
        d = self.u.shape[0]
        if self.u.ndim != 2 or self.u.shape != (d, d) or d & (d - 1) or d < 2:
            raise ValueError("unitary must be square with power-of-two size")
        if np.max(np.abs(self.u @ self.u.conj().T - np.eye(d))) > 1e-10:
            raise ValueError("matrix is not unitary within 1e-10")

    @property
    def n(self) -> int:
        return self.u.shape[0].bit_length() - 1

    def apply_mat(self, rho: np.ndarray) -> np.ndarray:
        return self.u @ rho @ self.u.conj().T

    def adjoint_mat(self, obs: np.ndarray) -> np.ndarray:
        return self.u.conj().T @ obs @ self.u


@dataclass(frozen=True)
class DepolarizingChannel:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one qubit")

    def apply_mat(self, rho: np.ndarray) -> np.ndarray:
        d = 1 << self.n
        return np.trace(rho) / d * np.eye(d, dtype=np.complex128)

    def adjoint_mat(self, obs: np.ndarray) -> np.ndarray:
        d = 1 << self.n
        return np.trace(obs) / d * np.eye(d, dtype=np.complex128)


@dataclass(frozen=True)
class PauliSpikeChannel:
    """rho -> tr(rho) (I + 3 eps P)/2^n; requires 0 < eps <= 1/3 so the fixed
    output stays a state.  tr(Q out) is 3 eps for Q = P and 0 for any other
    non-identity Q."""

    epsilon: float
    pauli: PauliString

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0 / 3.0:
            raise ValueError("spike strength must lie in (0, 1/3]")
        if self.pauli.degree == 0:
            raise ValueError("spike direction must be a non-identity Pauli")

    @property
    def n(self) -> int:
        return self.pauli.n

    def _output(self) -> np.ndarray:
        d = 1 << self.n
        p = _dense_pauli(self.pauli.n, self.pauli.x, self.pauli.z)
        return (np.eye(d, dtype=np.complex128) + 3.0 * self.epsilon * p) / d

    def apply_mat(self, rho: np.ndarray) -> np.ndarray:
        return np.trace(rho).real * self._output()

    def adjoint_mat(self, obs: np.ndarray) -> np.ndarray:
        d = 1 << self.n
        c = np.trace(obs @ self._output())
        return c * np.eye(d, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class NoisyUnitaryChannel:
    """(1 - lam) U rho U+  +  lam I/2^n."""

    u: np.ndarray
    lam: float

    def __post_init__(self):
        UnitaryChannel(self.u)  # reuse the unitarity check
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError("noise strength must lie in [0, 1]")

    @property
    def n(self) -> int:
        return self.u.shape[0].bit_length() - 1

    def apply_mat(self, rho: np.ndarray) -> np.ndarray:
        d = 1 << self.n
        mixed = np.trace(rho) / d * np.eye(d, dtype=np.complex128)
        return (1.0 - self.lam) * (self.u @ rho @ self.u.conj().T) + self.lam * mixed

    def adjoint_mat(self, obs: np.ndarray) -> np.ndarray:
        d = 1 << self.n
        mixed = np.trace(obs) / d * np.eye(d, dtype=np.complex128)
        return (1.0 - self.lam) * (self.u.conj().T @ obs @ self.u) + self.lam * mixed


Channel = UnitaryChannel | DepolarizingChannel | PauliSpikeChannel | NoisyUnitaryChannel


def apply(c: Channel, rho: DensityMatrix) -> DensityMatrix:
    """Push a state through the channel (output re-validated)."""
    if c.n != rho.n:
        raise ValueError("qubit count mismatch")
    return DensityMatrix(c.n, c.apply_mat(rho.mat))


def heisenberg_adjoint(c: Channel, o: Observable) -> np.ndarray:
    """Dense adjoint image E+(O), so tr(O E(rho)) = tr(E+(O) rho)."""
    if c.n != o.n:
        raise ValueError("qubit count mismatch")
    _check_dense(c.n)
    return c.adjoint_mat(o.to_matrix())


def exact_pauli_coefficient(c: Channel, o: Observable, p: PauliString) -> float:
    """alpha_P = tr(P E+(O)) / 2^n, the target of the learner's estimates."""
    adj = heisenberg_adjoint(c, o)
    return pauli_expectation(p, adj) / (1 << c.n)


def save_unitary(path: str, u: np.ndarray) -> None:
    """Write a unitary as JSON: row-major nested lists of [re, im] pairs."""
    data = {
        "n": int(u.shape[0]).bit_length() - 1,
        "u": [[[float(v.real), float(v.imag)] for v in row] for row in u],
    }
    with open(path, "w") as f:
        json.dump(data, f)


def load_unitary(path: str) -> np.ndarray:
    with open(path) as f:
        data = json.load(f)
    u = np.array(
        [[complex(re, im) for re, im in row] for row in data["u"]],
        dtype=np.complex128,
    )
    return u


def channel_from_config(cfg: dict, n: int, rng: np.random.Generator) -> Channel:
    """Build a channel from a config mapping.

    Recognized kinds: "haar", "clifford", "depolarizing",
    "spike" (fields: epsilon, pauli), "file" (field: path; row-major
    [re, im] JSON as written by save_unitary).  Unitary kinds accept an
    optional "noise" field, mixing in depolarizing noise of that strength.
    """
    kind = cfg.get("kind")
    lam = float(cfg.get("noise", 0.0))
    if kind in ("haar", "clifford", "file"):
        if kind == "haar":
            from .ensembles import haar_unitary

            u = haar_unitary(n, rng)
        elif kind == "clifford":
            from .ensembles import uniform_clifford

            u = uniform_clifford(n, rng)
        else:
            u = load_unitary(cfg["path"])
            if u.shape[0] != 1 << n:
                raise ValueError("unitary file size disagrees with qubit count")
        return NoisyUnitaryChannel(u, lam) if lam > 0.0 else UnitaryChannel(u)
    if lam > 0.0:
        raise ValueError("the noise field only applies to unitary channel kinds")
    if kind == "depolarizing":
        return DepolarizingChannel(n)
    if kind == "spike":
        p = PauliString.from_label(cfg["pauli"])
        if p.n != n:
            raise ValueError(f"spike pauli {p.label!r} is not {n} qubits")
        return PauliSpikeChannel(float(cfg["epsilon"]), p)
    raise ValueError(f"unknown channel kind {kind!r}")
