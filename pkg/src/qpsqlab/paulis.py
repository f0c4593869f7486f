"""Pauli strings and few-body observables on n qubits.

Encoding: a Pauli string is a pair of bitmasks (x, z) with bit i referring to
qubit i.  Bits (x_i, z_i) = (0,0), (1,0), (1,1), (0,1) mean I, X, Y, Z.  The
matrix convention is the Hermitian one,

    P(x, z) = i^{|x & z|} X^x Z^z,

so every string squares to the identity.  Dense matrices use the usual kron
order: qubit 0 is the leftmost tensor factor, i.e. the most significant bit
of a computational basis index.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PAULI_SYMBOLS = "IXYZ"

# (x, z) bit pairs per symbol, indexed like PAULI_SYMBOLS
_SYMBOL_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}

# default edge of the dense regime; matrices above this refuse to materialize
DENSE_QUBIT_CAP = 10


def _check_dense(n: int, cap: int = DENSE_QUBIT_CAP) -> None:
    if n > cap:
        raise ValueError(f"dense matrices capped at {cap} qubits, got n={n}")


@dataclass(frozen=True, order=False)
class PauliString:
    """An n-qubit Pauli string in (x, z) bitmask form."""

    n: int
    x: int
    z: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one qubit")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bitmask exceeds qubit count")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, symbol: str) -> "PauliString":
        """Single-site Pauli, identity elsewhere."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        xb, zb = _SYMBOL_BITS[symbol]
        return cls(n, xb << qubit, zb << qubit)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse e.g. "IZXI"; character i addresses qubit i."""
        if not label or any(c not in _SYMBOL_BITS for c in label):
            raise ValueError(f"bad pauli label {label!r}")
        x = z = 0
        for i, c in enumerate(label):
            xb, zb = _SYMBOL_BITS[c]
            x |= xb << i
            z |= zb << i
        return cls(len(label), x, z)

    @property
    def label(self) -> str:
        return "".join(self.symbol(i) for i in range(self.n))

    def symbol(self, qubit: int) -> str:
        xb = (self.x >> qubit) & 1
        zb = (self.z >> qubit) & 1
        return "IXZY"[xb + 2 * zb]

    @property
    def degree(self) -> int:
        """Number of non-identity sites."""
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        m = self.x | self.z
        return tuple(i for i in range(self.n) if (m >> i) & 1)

    def sort_key(self):
        """Canonical order: degree first, then site-by-site with X < Y < Z."""
        ranks = {"X": 0, "Y": 1, "Z": 2}
        return (self.degree, tuple((i, ranks[self.symbol(i)]) for i in self.support))

    def to_matrix(self) -> np.ndarray:
        _check_dense(self.n)
        return _dense_pauli(self.n, self.x, self.z)

    def __repr__(self):
        return f"PauliString({self.label!r})"


def _reverse_bits(mask: int, n: int) -> int:
    out = 0
    for i in range(n):
        if (mask >> i) & 1:
            out |= 1 << (n - 1 - i)
    return out


@lru_cache(maxsize=8192)
def _phase_perm(n: int, x: int, z: int):
    """Sparse action of P(x, z): P|b> = phases[b] |b ^ flip>.

    Returned in index space (qubit 0 = most significant bit); phases is a
    read-only complex array of length 2^n.
    """
    flip = _reverse_bits(x, n)
    zidx = _reverse_bits(z, n)
    b = np.arange(1 << n, dtype=np.uint64)
    signs = 1.0 - 2.0 * (np.bitwise_count(b & np.uint64(zidx)) & 1)
    phases = (1j ** ((x & z).bit_count() % 4)) * signs.astype(np.complex128)
    phases.setflags(write=False)
    return flip, phases


@lru_cache(maxsize=2048)
def _dense_pauli(n: int, x: int, z: int) -> np.ndarray:
    flip, phases = _phase_perm(n, x, z)
    d = 1 << n
    m = np.zeros((d, d), dtype=np.complex128)
    cols = np.arange(d)
    m[cols ^ flip, cols] = phases
    m.setflags(write=False)
    return m


def pauli_expectation(p: PauliString, rho: np.ndarray) -> float:
    """tr(P rho) for a dense matrix rho (real up to roundoff for Hermitian rho)."""
    flip, phases = _phase_perm(p.n, p.x, p.z)
    b = np.arange(rho.shape[0])
    return float(np.real(np.sum(phases * rho[b, b ^ flip])))


def pauli_expectation_vec(p: PauliString, psi: np.ndarray) -> float:
    """<psi| P |psi> for a statevector."""
    flip, phases = _phase_perm(p.n, p.x, p.z)
    b = np.arange(psi.shape[0])
    return float(np.real(np.sum(np.conj(psi[b ^ flip]) * phases * psi)))


def enumerate_low_degree(n: int, k: int) -> list[PauliString]:
    """All Pauli strings on n qubits with degree <= k, in canonical order.

    Includes the identity.  The count is sum_{j<=k} C(n, j) 3^j.
    """
    if k < 0 or k > n:
        raise ValueError(f"degree bound k={k} outside 0..{n}")
    out = [PauliString.identity(n)]
    for j in range(1, k + 1):
        batch = []
        for sites in itertools.combinations(range(n), j):
            for symbols in itertools.product("XYZ", repeat=j):
                x = z = 0
                for q, s in zip(sites, symbols):
                    xb, zb = _SYMBOL_BITS[s]
                    x |= xb << q
                    z |= zb << q
                batch.append(PauliString(n, x, z))
        batch.sort(key=PauliString.sort_key)
        out.extend(batch)
    return out


def low_degree_count(n: int, k: int) -> int:
    return sum(math.comb(n, j) * 3**j for j in range(k + 1))


@dataclass(frozen=True)
class Observable:
    """Real linear combination of Pauli strings, sum_m a_m P_m.

    Terms are stored deduplicated in canonical order, so equal observables
    compare equal.  Dense data (matrix, spectral norm) is computed on demand
    and cached; treat instances as immutable values.
    """

    n: int
    terms: tuple[tuple[float, PauliString], ...]

    def __post_init__(self):
        seen = set()
        for coeff, p in self.terms:
            if p.n != self.n:
                raise ValueError("observable mixes qubit counts")
            if p in seen:
                raise ValueError(f"duplicate pauli term {p.label}")
            seen.add(p)

    @classmethod
    def from_terms(cls, terms, n: int | None = None) -> "Observable":
        """Build from (coeff, PauliString) pairs, merging duplicates."""
        acc: dict[PauliString, float] = {}
        for coeff, p in terms:
            acc[p] = acc.get(p, 0.0) + float(coeff)
        if not acc and n is None:
            raise ValueError("empty observable needs an explicit qubit count")
        nn = n if n is not None else next(iter(acc)).n
        ordered = sorted(acc.items(), key=lambda kv: kv[0].sort_key())
        return cls(nn, tuple((c, p) for p, c in ordered if c != 0.0))

    @classmethod
    def single_pauli(cls, p: PauliString, coeff: float = 1.0) -> "Observable":
        return cls(p.n, ((float(coeff), p),))

    @property
    def pauli_1_norm(self) -> float:
        return math.fsum(abs(c) for c, _ in self.terms)

    @property
    def max_degree(self) -> int:
        return max((p.degree for _, p in self.terms), default=0)

    def coefficient(self, p: PauliString) -> float:
        for c, q in self.terms:
            if q == p:
                return c
        return 0.0

    def to_matrix(self) -> np.ndarray:
        cached = getattr(self, "_dense", None)
        if cached is None:
            _check_dense(self.n)
            d = 1 << self.n
            m = np.zeros((d, d), dtype=np.complex128)
            for c, p in self.terms:
                m += c * _dense_pauli(p.n, p.x, p.z)
            m.setflags(write=False)
            object.__setattr__(self, "_dense", m)
            cached = m
        return cached

    def operator_norm(self) -> float:
        """Spectral norm, via dense eigenvalues (desk scale only)."""
        cached = getattr(self, "_opnorm", None)
        if cached is None:
            evals = np.linalg.eigvalsh(self.to_matrix())
            cached = float(np.max(np.abs(evals)))
            object.__setattr__(self, "_opnorm", cached)
        return cached

    def expectation(self, rho: np.ndarray) -> float:
        """tr(O rho) for a dense matrix rho."""
        return math.fsum(c * pauli_expectation(p, rho) for c, p in self.terms)

    def expectation_vec(self, psi: np.ndarray) -> float:
        return math.fsum(c * pauli_expectation_vec(p, psi) for c, p in self.terms)

    def to_json(self) -> str:
        return json.dumps(
            [{"coeff": c, "pauli": p.label} for c, p in self.terms],
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> "Observable":
        data = json.loads(text)
        terms = [(float(t["coeff"]), PauliString.from_label(t["pauli"])) for t in data]
        return cls.from_terms(terms, n=n)

    def __repr__(self):
        body = " + ".join(f"{c:g}*{p.label}" for c, p in self.terms) or "0"
        return f"Observable({body})"


def validate_few_body(o: Observable, kappa: int, incidence_cap: int) -> bool:
    """True iff every term has degree <= kappa and every qubit index appears
    in at most incidence_cap terms."""
    counts = [0] * o.n
    for _, p in o.terms:
        if p.degree > kappa:
            return False
        for q in p.support:
            counts[q] += 1
    return all(c <= incidence_cap for c in counts)
