"""Moment and concentration experiments for the random ensembles.

Each experiment returns an ExperimentReport of parameter-point checks:
an estimate, the bound it is held against, a confidence interval, and a
pass / fail / inconclusive verdict.  Bounds checked here:

  * first moment: the ensemble-averaged channel is depolarizing;
  * second moment: Var tr(O U rho U+) <= 1/(2^n + 1) for unit-norm O
    (two-designs, so both Haar and uniform Clifford);
  * concentration: Pr[|tr(O U rho U+) - tr(O)/2^n| > tau] <= 2 exp(-2^n tau^2 / 48)
    for Haar U, with the exceedance also non-increasing in n;
  * spike channels: tr(Q spike_{eps,P}(rho)) = 3 eps [P = Q], input-independent,
    and exactly 0 under the depolarizing channel.

Sampling is split into fixed-size chunks with pre-spawned child generators,
so results are byte-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channels import DepolarizingChannel, PauliSpikeChannel
from .ensembles import haar_unitary, uniform_clifford
from .paulis import Observable, PauliString, pauli_expectation, pauli_expectation_vec
from .stats import bootstrap_variance_ci, wilson_interval

_CHUNK = 4096


@dataclass(frozen=True)
class CheckResult:
    experiment: str
    ensemble: str
    n: int
    detail: str
    estimate: float
    bound: float
    ci_low: float
    ci_high: float
    verdict: str  # pass | fail | inconclusive

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


@dataclass(frozen=True)
class ExperimentReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def merged(self, other: "ExperimentReport") -> "ExperimentReport":
        return ExperimentReport(self.checks + other.checks)


def _sample_unitary(kind: str, n: int, rng: np.random.Generator) -> np.ndarray:
    if kind == "haar":
        return haar_unitary(n, rng)
    if kind == "clifford":
        return uniform_clifford(n, rng)
    raise ValueError(f"unknown ensemble {kind!r}")


def _values_chunk(args) -> np.ndarray:
    kind, n, pairs, count, seed = args
    rng = np.random.default_rng(seed)
    out = np.empty((len(pairs), count))
    for s in range(count):
        u = _sample_unitary(kind, n, rng)
        for i, (psi, p) in enumerate(pairs):
            out[i, s] = pauli_expectation_vec(p, u @ psi)
    return out


def ensemble_expectations(
    kind: str,
    n: int,
    pairs: list[tuple[np.ndarray, PauliString]],
    samples: int,
    rng: np.random.Generator,
    jobs: int = 1,
) -> np.ndarray:
    """tr(P U |psi><psi| U+) for each (psi, P) pair over shared draws of U.

    Returns an array of shape (len(pairs), samples).  Chunk boundaries and
    per-chunk seeds are fixed by `samples` alone, so the result does not
    depend on the worker count.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    counts = [_CHUNK] * (samples // _CHUNK)
    if samples % _CHUNK:
        counts.append(samples % _CHUNK)
    seeds = rng.spawn(len(counts))
    tasks = [(kind, n, pairs, c, s) for c, s in zip(counts, seeds)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_values_chunk, tasks))
    else:
        chunks = [_values_chunk(t) for t in tasks]
    return np.concatenate(chunks, axis=1)


def variance_experiment(
    kind: str,
    n: int,
    pairs: list[tuple[np.ndarray, PauliString]],
    samples: int,
    rng: np.random.Generator,
    *,
    n_boot: int = 1000,
    jobs: int = 1,
) -> ExperimentReport:
    """Second-moment check: per-pair sample variance against 1/(2^n + 1).

    pairs holds (statevector, PauliString) probes; all pairs share the same
    unitary draws.  A pair passes when its variance stays below the bound
    plus three bootstrap half-widths.
    """
    bound = 1.0 / ((1 << n) + 1)
    values = ensemble_expectations(kind, n, pairs, samples, rng, jobs=jobs)
    checks = []
    if samples < 2:
        for i in range(len(pairs)):
            checks.append(
                CheckResult("variance", kind, n, f"pair={i}", float("nan"),
                            bound, float("nan"), float("nan"), "inconclusive")
            )
        return ExperimentReport(tuple(checks))
    boot_rng = rng.spawn(1)[0]
    lo, hi = bootstrap_variance_ci(values, boot_rng, n_boot=n_boot)
    var = np.var(values, axis=1, ddof=1)
    for i in range(len(pairs)):
        half = (float(hi[i]) - float(lo[i])) / 2.0
        ok = float(var[i]) <= bound + 3.0 * half
        checks.append(
            CheckResult("variance", kind, n, f"pair={i}", float(var[i]),
                        bound, float(lo[i]), float(hi[i]), "pass" if ok else "fail")
        )
    return ExperimentReport(tuple(checks))


def concentration_experiment(
    n_values: list[int],
    tau: float,
    samples: int,
    rng: np.random.Generator,
    *,
    jobs: int = 1,
) -> ExperimentReport:
    """Haar exceedance Pr[|tr(O U rho U+) - 0| > tau] for rho = |0..0>,
    O = Z on qubit 0, swept over qubit counts.

    Per-n verdict: exceedance <= 2 exp(-2^n tau^2 / 48) + CI half-width.
    One extra check requires the exceedance to be non-increasing in n
    (up to the summed half-widths).
    """
    if not n_values:
        raise ValueError("need at least one qubit count")
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    checks = []
    excs = []
    halfs = []
    for n in n_values:
        psi0 = np.zeros(1 << n, dtype=np.complex128)
        psi0[0] = 1.0
        z1 = PauliString.single(n, 0, "Z")
        values = ensemble_expectations("haar", n, [(psi0, z1)], samples, rng, jobs=jobs)[0]
        hits = int(np.sum(np.abs(values) > tau))
        exc = hits / samples
        lo, hi = wilson_interval(hits, samples)
        half = (hi - lo) / 2.0
        bound = 2.0 * math.exp(-((1 << n) * tau * tau) / 48.0)
        ok = exc <= bound + half
        checks.append(
            CheckResult("concentration", "haar", n, f"tau={tau}", exc, bound,
                        lo, hi, "pass" if ok else "fail")
        )
        excs.append(exc)
        halfs.append(half)
    mono = all(
        excs[i + 1] <= excs[i] + halfs[i] + halfs[i + 1] for i in range(len(excs) - 1)
    )
    checks.append(
        CheckResult("concentration", "haar", max(n_values), f"monotone tau={tau}",
                    max(excs), float("nan"), 0.0, 0.0, "pass" if mono else "fail")
    )
    return ExperimentReport(tuple(checks))


def _mean_chunk(args):
    kind, n, count, seed = args
    rng = np.random.default_rng(seed)
    d = 1 << n
    acc = np.zeros((d, d), dtype=np.complex128)
    sq_re = np.zeros((d, d))
    sq_im = np.zeros((d, d))
    for _ in range(count):
        u = _sample_unitary(kind, n, rng)
        out = np.outer(u[:, 0], u[:, 0].conj())
        acc += out
        sq_re += out.real**2
        sq_im += out.imag**2
    return acc, sq_re, sq_im


def mean_channel_check(
    kind: str,
    n: int,
    samples: int,
    rng: np.random.Generator,
    *,
    jobs: int = 1,
) -> ExperimentReport:
    """First-moment check: the empirical mean of U|0..0><0..0|U+ against
    I/2^n, entrywise.  Passes when the largest component deviation stays
    within three standard errors."""
    if samples < 1:
        raise ValueError("need at least one sample")
    counts = [_CHUNK] * (samples // _CHUNK)
    if samples % _CHUNK:
        counts.append(samples % _CHUNK)
    seeds = rng.spawn(len(counts))
    tasks = [(kind, n, c, s) for c, s in zip(counts, seeds)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_mean_chunk, tasks))
    else:
        parts = [_mean_chunk(t) for t in tasks]
    d = 1 << n
    acc = sum(p[0] for p in parts)
    sq_re = sum(p[1] for p in parts)
    sq_im = sum(p[2] for p in parts)
    mean = acc / samples
    dev = mean - np.eye(d) / d
    estimate = float(max(np.max(np.abs(dev.real)), np.max(np.abs(dev.imag))))
    if samples < 2:
        return ExperimentReport((CheckResult(
            "mean-channel", kind, n, f"samples={samples}", estimate,
            float("nan"), float("nan"), float("nan"), "inconclusive"),))
    var_re = np.clip(sq_re / samples - mean.real**2, 0.0, None)
    var_im = np.clip(sq_im / samples - mean.imag**2, 0.0, None)
    se_max = float(np.sqrt(max(np.max(var_re), np.max(var_im)) / samples))
    bound = 3.0 * se_max
    ok = estimate <= bound
    return ExperimentReport((CheckResult(
        "mean-channel", kind, n, f"samples={samples}", estimate, bound,
        0.0, se_max, "pass" if ok else "fail"),))


def spike_distinguish_check(
    n: int,
    epsilon: float,
    paulis: list[PauliString],
    rng: np.random.Generator,
    *,
    n_states: int = 10,
    tol: float = 1e-10,
) -> ExperimentReport:
    """Exact spike identities: for every direction Q and probe P in the
    list, tr(P spike_{eps,Q}(rho)) equals 3 eps [P = Q] for all inputs rho,
    and the depolarizing channel zeroes every probe."""
    directions = [p for p in paulis if p.degree > 0]
    probes = directions
    rhos = []
    for _ in range(n_states):
        psi = haar_unitary(n, rng)[:, 0]
        rhos.append(np.outer(psi, psi.conj()))
    checks = []
    for q in directions:
        ch = PauliSpikeChannel(epsilon, q)
        outs = [ch.apply_mat(r) for r in rhos]
        for p in probes:
            target = 3.0 * epsilon if p == q else 0.0
            err = max(abs(pauli_expectation(p, o) - target) for o in outs)
            checks.append(CheckResult(
                "spike", "spike", n, f"Q={q.label},P={p.label}", err, tol,
                0.0, 0.0, "pass" if err <= tol else "fail"))
    dep = DepolarizingChannel(n)
    outs = [dep.apply_mat(r) for r in rhos]
    for p in probes:
        err = max(abs(pauli_expectation(p, o)) for o in outs)
        checks.append(CheckResult(
            "spike", "depolarizing", n, f"P={p.label}", err, tol,
            0.0, 0.0, "pass" if err <= tol else "fail"))
    return ExperimentReport(tuple(checks))
