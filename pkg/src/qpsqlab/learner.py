"""Low-degree learner for quantum processes from statistical queries.

The algorithm queries the process on uniformly random stabilizer product
states, forms the empirical correlations

    xhat_P = (1/N) sum_l y_l tr(P |s_l><s_l|),

and keeps the rescaled coefficient alphahat_P = 3^{|P|} xhat_P whenever the
degree is cheap enough, (1/3)^{|P|} > 2 eps_tilde, and the raw correlation
clears the noise floor, |xhat_P| > 2 * 3^{|P|/2} sqrt(eps_tilde) ||O||_P1.
The hypothesis predicts tr(O E(rho)) as sum alphahat_P tr(P rho).

Hyperparameters follow the guarantee-driven schedule: degree cap
k = ceil(log_1.5(2 / eps^2)), coefficient precision
eps_tilde = c * eps^2 / (2n)^k, and a Hoeffding-size query count.  The
derived N is astronomically conservative at desk scale, so experiment
drivers override it with explicit budgets (the formula value is still
reported).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .channels import Channel, apply
from .oracle import QPStatOracle
from .paulis import Observable, PauliString, enumerate_low_degree, pauli_expectation, pauli_expectation_vec
from .states import (
    EXPECT_LUT,
    STAB_LABELS,
    SampledState,
    StabilizerProductState,
    StateDistribution,
    density_of,
    expectation,
    sample_state,
    stab_expectation,
)

EXHAUSTIVE_QUBIT_CAP = 5

_LABEL_INDEX = {s: i for i, s in enumerate(STAB_LABELS)}
_SYMBOL_ROW = {"I": 0, "X": 1, "Y": 2, "Z": 3}


def degree_cap(epsilon: float) -> int:
    """k = ceil(log_1.5(2 / eps^2)); accuracy eps covers degrees above k."""
    if not 0.0 < epsilon <= 1.0:
        raise ValueError("epsilon must lie in (0, 1]")
    return math.ceil(math.log(2.0 / (epsilon * epsilon)) / math.log(1.5))


@dataclass(frozen=True)
class Hyperparams:
    epsilon: float
    k: int
    epsilon_tilde: float
    tau: float
    n_queries: int
    c_tilde: float = 1.0

    def effective_degree(self, n: int) -> int:
        """Degree actually enumerated; k can exceed n at practical epsilon."""
        return min(self.k, n)


def derive_hyperparams(
    epsilon: float,
    n: int,
    delta: float,
    m_observables: int = 1,
    *,
    c_tilde: float = 1.0,
    tau: float | None = None,
    n_queries: int | None = None,
    unbiased: bool = False,
) -> Hyperparams:
    """Hyperparameter schedule for target accuracy epsilon and failure delta.

    Without n_queries, N comes from a Hoeffding bound: the per-query answers
    lie within tau of a mean that is eps_tilde-resolved, which forces
    tau < eps_tilde (tau defaults to eps_tilde / 2).  With unbiased=True the
    oracle noise is assumed centered, the tau < eps_tilde restriction
    disappears, and N is sized by a two-sided tail bound instead.  Passing
    n_queries overrides the formula for desk-scale runs.
    """
    if not 0.0 < epsilon <= 1.0:
        raise ValueError("epsilon must lie in (0, 1]")
    if n < 1:
        raise ValueError("need at least one qubit")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    if m_observables < 1:
        raise ValueError("need at least one observable")
    if c_tilde <= 0.0:
        raise ValueError("c_tilde must be positive")

    k = degree_cap(epsilon)
    eps_tilde = c_tilde * epsilon * epsilon / float((2 * n) ** k)
    if tau is None:
        tau = eps_tilde / 2.0
    if not tau > 0.0:
        raise ValueError("tau must be positive")

    if n_queries is None:
        count = m_observables * float((3 * n) ** k)
        if unbiased:
            n_queries = math.ceil(
                8.0 * (1.0 + tau * tau) * math.log(4.0 * count / delta) / (eps_tilde * eps_tilde)
            )
        else:
            if tau >= eps_tilde:
                raise ValueError("Hoeffding sizing needs tau < eps_tilde")
            n_queries = math.ceil(
                2.0 * (1.0 + tau) ** 2 * math.log(2.0 * count / delta) / (eps_tilde - tau) ** 2
            )
    elif n_queries < 1:
        raise ValueError("n_queries must be positive")

    return Hyperparams(epsilon, k, eps_tilde, tau, int(n_queries), c_tilde)


@dataclass(frozen=True)
class TrainingSet:
    n: int
    states: tuple[StabilizerProductState, ...]
    values: np.ndarray
    exhaustive: bool = False

    def __post_init__(self):
        if len(self.states) != self.values.shape[0]:
            raise ValueError("states and values length mismatch")

    def __len__(self):
        return len(self.states)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["state_label", "y"])
        for s, y in zip(self.states, self.values):
            w.writerow([str(s), repr(float(y))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, exhaustive: bool = False) -> "TrainingSet":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["state_label", "y"]:
            raise ValueError("expected header state_label,y")
        states = tuple(StabilizerProductState.from_string(r[0]) for r in rows[1:])
        values = np.array([float(r[1]) for r in rows[1:]], dtype=np.float64)
        if not states:
            raise ValueError("empty training set")
        return cls(states[0].n, states, values, exhaustive)


def gather_data(
    oracle: QPStatOracle,
    n: int,
    n_queries: int,
    o: Observable,
    tau: float,
    rng: np.random.Generator,
    exhaustive: bool = False,
) -> TrainingSet:
    """Query the oracle on stabilizer product inputs.

    Sampled mode draws n_queries uniform states (n_queries = 0 gives an
    empty set); exhaustive mode queries each of the 6^n product states once.
    """
    if exhaustive:
        if n > EXHAUSTIVE_QUBIT_CAP:
            raise ValueError(f"exhaustive mode capped at {EXHAUSTIVE_QUBIT_CAP} qubits")
        import itertools

        states = tuple(
            StabilizerProductState(labels)
            for labels in itertools.product(STAB_LABELS, repeat=n)
        )
    else:
        if n_queries < 0:
            raise ValueError("n_queries must be nonnegative")
        idx = rng.integers(0, 6, size=(n_queries, n))
        states = tuple(
            StabilizerProductState(tuple(STAB_LABELS[i] for i in row)) for row in idx
        )
    values = np.array(
        [oracle.query(density_of(s), o, tau) for s in states], dtype=np.float64
    )
    return TrainingSet(n, states, values, exhaustive)


def _label_matrix(data: TrainingSet) -> np.ndarray:
    return np.array(
        [[_LABEL_INDEX[l] for l in s.labels] for s in data.states], dtype=np.int8
    )


def raw_coefficients(
    data: TrainingSet, paulis: list[PauliString]
) -> dict[PauliString, float]:
    """xhat_P for each requested Pauli (compensated summation over records)."""
    if len(data) == 0:
        return {p: 0.0 for p in paulis}
    labels = _label_matrix(data)
    m = len(data)
    out = {}
    for p in paulis:
        t = np.ones(m, dtype=np.int8)
        for q in p.support:
            t = t * EXPECT_LUT[_SYMBOL_ROW[p.symbol(q)], labels[:, q]]
        nz = np.flatnonzero(t)
        if nz.size == 0:
            out[p] = 0.0
        else:
            out[p] = math.fsum((data.values[nz] * t[nz]).tolist()) / m
    return out


@dataclass(frozen=True)
class Hypothesis:
    """Thresholded low-degree reconstruction of tr(O E(.))."""

    observable: Observable
    k: int
    entries: tuple[tuple[PauliString, float], ...]

    def coefficients(self) -> dict[PauliString, float]:
        return dict(self.entries)

    def to_json(self) -> str:
        return json.dumps(
            {
                "observable": json.loads(self.observable.to_json()),
                "k": self.k,
                "entries": [
                    {"pauli": p.label, "alpha": a} for p, a in self.entries
                ],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Hypothesis":
        data = json.loads(text)
        obs = Observable.from_json(json.dumps(data["observable"]))
        entries = tuple(
            (PauliString.from_label(e["pauli"]), float(e["alpha"]))
            for e in data["entries"]
        )
        return cls(obs, int(data["k"]), entries)


def estimate_coefficients(
    data: TrainingSet, o: Observable, k: int, epsilon_tilde: float
) -> Hypothesis:
    """Threshold the raw correlations into a hypothesis.

    A coefficient survives if its degree cost (1/3)^{|P|} exceeds
    2 eps_tilde and |xhat_P| clears 2 * 3^{|P|/2} sqrt(eps_tilde) ||O||_P1.
    """
    if epsilon_tilde <= 0.0:
        raise ValueError("epsilon_tilde must be positive")
    k_eff = min(k, data.n)
    paulis = enumerate_low_degree(data.n, k_eff)
    raw = raw_coefficients(data, paulis)
    norm1 = o.pauli_1_norm
    entries = []
    for p in paulis:
        xhat = raw[p]
        if (1.0 / 3.0) ** p.degree <= 2.0 * epsilon_tilde:
            continue
        if abs(xhat) <= 2.0 * 3.0 ** (p.degree / 2.0) * math.sqrt(epsilon_tilde) * norm1:
            continue
        entries.append((p, (3.0**p.degree) * xhat))
    return Hypothesis(o, k, tuple(entries))


def predict(
    h: Hypothesis,
    rho=None,
    expectations=None,
) -> float:
    """Evaluate the hypothesis on a state, given either a DensityMatrix /
    statevector or a precomputed map PauliString -> tr(P rho)."""
    if (rho is None) == (expectations is None):
        raise ValueError("pass exactly one of rho or expectations")
    if expectations is not None:
        try:
            return math.fsum(a * expectations[p] for p, a in h.entries)
        except KeyError as e:
            raise ValueError(f"missing expectation for {e.args[0].label}") from None
    if hasattr(rho, "mat"):
        return math.fsum(a * pauli_expectation(p, rho.mat) for p, a in h.entries)
    return math.fsum(a * pauli_expectation_vec(p, rho) for p, a in h.entries)


def state_expectations(s: SampledState, paulis) -> dict[PauliString, float]:
    """tr(P rho) for each Pauli, via the exact product-state table when the
    sample is a stabilizer product and dense algebra otherwise."""
    if s.labels is not None:
        sps = StabilizerProductState(s.labels)
        return {p: float(stab_expectation(p, sps)) for p in paulis}
    if s.vector is not None:
        return {p: pauli_expectation_vec(p, s.vector) for p in paulis}
    return {p: pauli_expectation(p, s.rho.mat) for p in paulis}


def evaluate_rms(
    h: Hypothesis,
    c: Channel,
    o: Observable,
    d: StateDistribution,
    n_test: int,
    rng: np.random.Generator,
) -> float:
    """RMS of h(rho) - tr(O E(rho)) over n_test draws from d."""
    if n_test < 1:
        raise ValueError("need at least one test state")
    paulis = [p for p, _ in h.entries]
    errs = np.empty(n_test)
    for i in range(n_test):
        s = sample_state(d, c.n, rng)
        truth = expectation(o, apply(c, s.rho))
        pred = predict(h, expectations=state_expectations(s, paulis))
        errs[i] = pred - truth
    return float(np.sqrt(np.mean(errs * errs)))


def fit(
    oracle: QPStatOracle,
    o: Observable,
    hp: Hyperparams,
    rng: np.random.Generator,
    exhaustive: bool = False,
) -> Hypothesis:
    """Gather data at the schedule's budget and tolerance, then estimate."""
    n = oracle.channel.n
    if hp.n_queries == 0 and not exhaustive:
        return Hypothesis(o, hp.k, ())
    data = gather_data(oracle, n, hp.n_queries, o, hp.tau, rng, exhaustive=exhaustive)
    return estimate_coefficients(data, o, hp.k, hp.epsilon_tilde)


def fit_many(
    oracle: QPStatOracle,
    observables: list[Observable],
    epsilon: float,
    delta: float,
    rng: np.random.Generator,
    *,
    n_queries: int | None = None,
    tau: float | None = None,
    c_tilde: float = 1.0,
) -> list[Hypothesis]:
    """Learn several observables with fresh data each; the failure budget is
    split as delta / M so all hypotheses are good simultaneously."""
    m = len(observables)
    out = []
    for o in observables:
        hp = derive_hyperparams(
            epsilon, oracle.channel.n, delta, m_observables=m,
            c_tilde=c_tilde, tau=tau, n_queries=n_queries,
        )
        out.append(fit(oracle, o, hp, rng))
    return out
