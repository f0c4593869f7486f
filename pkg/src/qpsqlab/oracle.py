"""Statistical-query access to a quantum process.

A query hands the oracle an input state rho, an observable O with spectral
norm at most 1, and a tolerance tau > 0; the oracle answers with some value
alpha satisfying |alpha - tr(O E(rho))| <= tau, and the caller is charged one
query.  Three response models:

  * Exact      -- returns the truth (the tolerance is only book-kept);
  * Gaussian   -- truth plus N(0, sigma^2) noise, sigma defaulting to tau/2.
                  Unclamped by default, so ~4.55% of answers land outside the
                  tolerance band; clamping restores the promise but biases
                  the answer distribution.
  * Shadow     -- simulates randomized single-qubit Pauli measurements on the
                  output state and returns the classical-shadow estimate of
                  tr(O out) from a configured number of shots.

Measurement simulation draws each shot's basis uniformly from {X, Y, Z} per
qubit and samples outcomes from the Born rule (shots sharing a basis pattern
are drawn together from one multinomial, which is distributionally
identical to per-shot sampling).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import Channel
from .paulis import Observable
from .states import DensityMatrix


@dataclass(frozen=True)
class ExactMode:
    pass


@dataclass(frozen=True)
class GaussianMode:
    sigma: float | None = None  # None: use tau/2 per query
    clamp: bool = False

    def __post_init__(self):
        if self.sigma is not None and not self.sigma > 0.0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class ShadowMode:
    shots: int

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError("need at least one shot")


OracleMode = ExactMode | GaussianMode | ShadowMode


def oracle_mode_from_config(cfg: dict) -> OracleMode:
    mode = cfg.get("mode", "exact")
    if mode == "exact":
        return ExactMode()
    if mode == "gaussian":
        sigma = cfg.get("sigma")
        return GaussianMode(None if sigma is None else float(sigma), bool(cfg.get("clamp", False)))
    if mode == "shadow":
        return ShadowMode(int(cfg["shots"]))
    raise ValueError(f"unknown oracle mode {mode!r}")


@dataclass(frozen=True)
class BudgetReport:
    queries: int
    by_tolerance: dict[float, int]


# measurement bases, indexed 0..2
_BASIS = "XYZ"
_S2 = 1.0 / math.sqrt(2.0)
_ROTATIONS = (
    np.array([[_S2, _S2], [_S2, -_S2]], dtype=np.complex128),      # X: rows <+|, <-|
    np.array([[_S2, -1j * _S2], [_S2, 1j * _S2]], dtype=np.complex128),  # Y: <+y|, <-y|
    np.eye(2, dtype=np.complex128),                                 # Z: <0|, <1|
)
_OUTCOME_LABELS = (("+", "-"), ("+y", "-y"), ("0", "1"))


def outcome_label(basis: int, bit: int) -> str:
    return _OUTCOME_LABELS[basis][bit]


def sample_measurement_groups(
    rho: np.ndarray, n: int, shots: int, rng: np.random.Generator
) -> list[tuple[tuple[int, ...], np.ndarray]]:
    """Randomized Pauli measurement shots, grouped by basis pattern.

    Returns (pattern, counts) pairs where pattern[i] indexes XYZ for qubit i
    and counts[o] is the number of shots yielding outcome index o (qubit i's
    bit sits at position n-1-i).
    """
    bases = rng.integers(0, 3, size=(shots, n))
    patterns, counts = np.unique(bases, axis=0, return_counts=True)
    out = []
    for pat, cnt in zip(patterns, counts):
        r = _ROTATIONS[pat[0]]
        for b in pat[1:]:
            r = np.kron(r, _ROTATIONS[b])
        probs = np.einsum("ij,jk,ik->i", r, rho, r.conj()).real
        probs = np.clip(probs, 0.0, None)
        probs /= probs.sum()
        out.append((tuple(int(b) for b in pat), rng.multinomial(int(cnt), probs)))
    return out


def shadow_estimate(
    o: Observable, groups: list[tuple[tuple[int, ...], np.ndarray]], shots: int
) -> float:
    """Classical-shadow estimate of tr(O rho) from grouped measurement data.

    Per shot, a Pauli term contributes prod over its support of
    3 * <outcome| P_i |outcome>, which is zero unless every measured basis
    matches the term's symbol there.
    """
    n = o.n
    idx = np.arange(1 << n, dtype=np.uint64)
    total = 0.0
    for coeff, p in o.terms:
        if p.degree == 0:
            total += coeff
            continue
        want = {q: "XYZ".index(p.symbol(q)) for q in p.support}
        acc = 0.0
        for pat, cnt in groups:
            if any(pat[q] != b for q, b in want.items()):
                continue
            suppmask = np.uint64(sum(1 << (n - 1 - q) for q in p.support))
            signs = 1.0 - 2.0 * (np.bitwise_count(idx & suppmask) & 1)
            acc += float(np.dot(cnt, signs))
        total += coeff * (3.0**p.degree) * acc / shots
    return total


def shadow_variance_bound(o: Observable) -> float:
    """(sum_m |a_m| 3^{|P_m|/2})^2, a bound on the single-shot variance."""
    return math.fsum(abs(c) * 3.0 ** (p.degree / 2.0) for c, p in o.terms) ** 2


def chebyshev_shots(o: Observable, tau: float, delta: float) -> int:
    """Shots making the shadow estimate tau-accurate except with probability
    delta, by Chebyshev on the variance bound."""
    if not (tau > 0.0 and 0.0 < delta < 1.0):
        raise ValueError("need tau > 0 and delta in (0, 1)")
    return math.ceil(shadow_variance_bound(o) / (delta * tau * tau))


class QPStatOracle:
    """Query-counted statistical access to one channel.

    Not thread-safe: the query counter and caches are plain attributes, so
    share one oracle per worker (or merge budget reports afterwards).
    """

    def __init__(
        self,
        channel: Channel,
        mode: OracleMode,
        rng: np.random.Generator,
        tolerance_default: float = 0.1,
    ):
        if not tolerance_default > 0.0:
            raise ValueError("default tolerance must be positive")
        self.channel = channel
        self.mode = mode
        self.rng = rng
        self.tolerance_default = float(tolerance_default)
        self.query_count = 0
        self._by_tolerance: dict[float, int] = {}
        self._adjoints: dict[int, tuple[Observable, np.ndarray]] = {}

    def _adjoint(self, o: Observable) -> np.ndarray:
        hit = self._adjoints.get(id(o))
        if hit is None or hit[0] is not o:
            from .channels import heisenberg_adjoint

            self._adjoints[id(o)] = (o, heisenberg_adjoint(self.channel, o))
        return self._adjoints[id(o)][1]

    def query(self, rho: DensityMatrix, o: Observable, tau: float | None = None) -> float:
        if rho.n != self.channel.n or o.n != self.channel.n:
            raise ValueError("qubit count mismatch")
        tau = self.tolerance_default if tau is None else float(tau)
        if not tau > 0.0:
            raise ValueError("tolerance must be positive")
        if o.operator_norm() > 1.0 + 1e-9:
            raise ValueError("observable spectral norm exceeds 1")

        self.query_count += 1
        self._by_tolerance[tau] = self._by_tolerance.get(tau, 0) + 1

        if isinstance(self.mode, ShadowMode):
            out = self.channel.apply_mat(rho.mat)
            groups = sample_measurement_groups(out, o.n, self.mode.shots, self.rng)
            return shadow_estimate(o, groups, self.mode.shots)

        truth = float(np.einsum("ij,ji->", self._adjoint(o), rho.mat).real)
        if isinstance(self.mode, ExactMode):
            return truth
        sigma = self.mode.sigma if self.mode.sigma is not None else tau / 2.0
        value = truth + sigma * float(self.rng.standard_normal())
        if self.mode.clamp:
            value = min(max(value, truth - tau), truth + tau)
        return value

    def budget_report(self) -> BudgetReport:
        return BudgetReport(self.query_count, dict(self._by_tolerance))

    def reset_budget(self) -> None:
        self.query_count = 0
        self._by_tolerance = {}
