"""States: single-qubit stabilizer products, density matrices, distributions.

Single-qubit stabilizer states are labeled "0", "1", "+", "-", "+y", "-y"
(Z, X, Y eigenbases).  A product state is the string of its per-qubit labels,
e.g. "0+-y" for |0> |+> |-y>; the two-character tokens +y / -y are parsed
greedily.  Qubit 0 is the leftmost tensor factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .paulis import Observable, PauliString, _check_dense

STAB_LABELS = ("0", "1", "+", "-", "+y", "-y")

_S2 = 1.0 / np.sqrt(2.0)
_STAB_VECTORS = {
    "0": np.array([1.0, 0.0], dtype=np.complex128),
    "1": np.array([0.0, 1.0], dtype=np.complex128),
    "+": np.array([_S2, _S2], dtype=np.complex128),
    "-": np.array([_S2, -_S2], dtype=np.complex128),
    "+y": np.array([_S2, 1j * _S2], dtype=np.complex128),
    "-y": np.array([_S2, -1j * _S2], dtype=np.complex128),
}

# <s| W |s> for W in IXYZ, s a stabilizer label; rows follow "IXYZ",
# columns follow STAB_LABELS
EXPECT_LUT = np.array(
    [
        [1, 1, 1, 1, 1, 1],     # I
        [0, 0, 1, -1, 0, 0],    # X
        [0, 0, 0, 0, 1, -1],    # Y
        [1, -1, 0, 0, 0, 0],    # Z
    ],
    dtype=np.int8,
)

_SYMBOL_ROW = {"I": 0, "X": 1, "Y": 2, "Z": 3}
_LABEL_COL = {s: i for i, s in enumerate(STAB_LABELS)}


def parse_state_label(text: str) -> tuple[str, ...]:
    """Split a product-state string into per-qubit labels."""
    text = text.replace("−", "-")  # tolerate a typeset minus sign
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c in "+-" and i + 1 < len(text) and text[i + 1] == "y":
            out.append(c + "y")
            i += 2
        elif c in "01+-":
            out.append(c)
            i += 1
        else:
            raise ValueError(f"bad state label {text!r} at position {i}")
    if not out:
        raise ValueError("empty state label")
    return tuple(out)


@dataclass(frozen=True)
class StabilizerProductState:
    """Product of single-qubit stabilizer states."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("need at least one qubit")
        for s in self.labels:
            if s not in _LABEL_COL:
                raise ValueError(f"unknown stabilizer label {s!r}")

    @classmethod
    def from_string(cls, text: str) -> "StabilizerProductState":
        return cls(parse_state_label(text))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __str__(self):
        return "".join(self.labels)

    def statevector(self) -> np.ndarray:
        psi = _STAB_VECTORS[self.labels[0]]
        for s in self.labels[1:]:
            psi = np.kron(psi, _STAB_VECTORS[s])
        return psi


def stab_expectation(p: PauliString, s: StabilizerProductState) -> int:
    """tr(P |s><s|) for a stabilizer product state; always 0, +1 or -1."""
    if p.n != s.n:
        raise ValueError("qubit count mismatch")
    out = 1
    for q in p.support:
        v = EXPECT_LUT[_SYMBOL_ROW[p.symbol(q)], _LABEL_COL[s.labels[q]]]
        if v == 0:
            return 0
        out *= int(v)
    return out


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix: Hermitian, unit trace, PSD up to roundoff."""

    n: int
    mat: np.ndarray

    def __post_init__(self):
        d = 1 << self.n
        if self.mat.shape != (d, d):
            raise ValueError(f"expected shape {(d, d)}, got {self.mat.shape}")
        if np.max(np.abs(self.mat - self.mat.conj().T)) > 1e-10:
            raise ValueError("matrix is not Hermitian within 1e-10")
        if abs(np.trace(self.mat).real - 1.0) > 1e-10:
            raise ValueError("trace deviates from 1 by more than 1e-10")
        if np.min(np.linalg.eigvalsh(self.mat)) < -1e-9:
            raise ValueError("matrix has an eigenvalue below -1e-9")

    @classmethod
    def from_statevector(cls, psi: np.ndarray) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=np.complex128)
        n = int(round(np.log2(psi.shape[0])))
        if 1 << n != psi.shape[0]:
            raise ValueError("statevector length is not a power of two")
        nrm = np.linalg.norm(psi)
        if abs(nrm - 1.0) > 1e-10:
            raise ValueError("statevector is not normalized")
        return cls(n, np.outer(psi, psi.conj()))

    def to_json(self) -> str:
        """Row-major [re, im] pairs; a debugging format, not a storage one."""
        pairs = [
            [[float(v.real), float(v.imag)] for v in row] for row in self.mat
        ]
        return json.dumps({"n": self.n, "mat": pairs}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "DensityMatrix":
        data = json.loads(text)
        mat = np.array(
            [[complex(re, im) for re, im in row] for row in data["mat"]],
            dtype=np.complex128,
        )
        return cls(int(data["n"]), mat)

    @classmethod
    def maximally_mixed(cls, n: int) -> "DensityMatrix":
        d = 1 << n
        return cls(n, np.eye(d, dtype=np.complex128) / d)


@lru_cache(maxsize=8192)
def _stab_density(labels: tuple[str, ...]) -> DensityMatrix:
    return DensityMatrix.from_statevector(StabilizerProductState(labels).statevector())


def density_of(s: StabilizerProductState) -> DensityMatrix:
    _check_dense(s.n)
    return _stab_density(s.labels)


def expectation(o: Observable, rho: DensityMatrix) -> float:
    """tr(O rho)."""
    if o.n != rho.n:
        raise ValueError("qubit count mismatch")
    return o.expectation(rho.mat)


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """(1/2) ||a - b||_1."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    evals = np.linalg.eigvalsh(a.mat - b.mat)
    return 0.5 * float(np.sum(np.abs(evals)))


_DIST_ALIASES = {
    "computational": "computational",
    "computational-basis": "computational",
    "cb": "computational",
    "stabilizer": "stabilizer",
    "stabilizer-product": "stabilizer",
    "stab": "stabilizer",
    "haar": "haar",
    "haar-random": "haar",
}


@dataclass(frozen=True)
class StateDistribution:
    """One of the three input-state ensembles: computational-basis-uniform,
    stabilizer-product-uniform, or Haar-random pure states."""

    kind: str

    def __post_init__(self):
        if self.kind not in ("computational", "stabilizer", "haar"):
            raise ValueError(f"unknown distribution {self.kind!r}")

    @classmethod
    def parse(cls, name: str) -> "StateDistribution":
        try:
            return cls(_DIST_ALIASES[name.strip().lower()])
        except KeyError:
            raise ValueError(f"unknown distribution {name!r}") from None


@dataclass(frozen=True)
class SampledState:
    """A drawn input state.  labels is set for product-state draws (the
    computational and stabilizer kinds), vector for pure-state draws."""

    kind: str
    rho: DensityMatrix
    labels: tuple[str, ...] | None = None
    vector: np.ndarray | None = None

    @property
    def description(self) -> str:
        return "".join(self.labels) if self.labels is not None else self.kind


def sample_state(d: StateDistribution, n: int, rng: np.random.Generator) -> SampledState:
    """Draw one state from the distribution; see SampledState for contents."""
    if n < 1:
        raise ValueError("need at least one qubit")
    _check_dense(n)
    if d.kind == "computational":
        b = int(rng.integers(0, 1 << n))
        labels = tuple("1" if (b >> (n - 1 - i)) & 1 else "0" for i in range(n))
        return SampledState("computational", density_of(StabilizerProductState(labels)), labels=labels)
    if d.kind == "stabilizer":
        idx = rng.integers(0, 6, size=n)
        labels = tuple(STAB_LABELS[i] for i in idx)
        return SampledState("stabilizer", density_of(StabilizerProductState(labels)), labels=labels)
    # haar: first column of a Haar unitary, so state and process sampling
    # share one audited code path
    from .ensembles import haar_unitary

    psi = haar_unitary(n, rng)[:, 0]
    return SampledState("haar", DensityMatrix.from_statevector(psi), vector=psi)
