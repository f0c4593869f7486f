"""Challenge-response authentication on top of a quantum process, and the
learner-based forgery attack against it.

Setup measures a database of challenge-response pairs (y values from the
verifier's own oracle access).  A round replays a uniformly random stored
challenge; the responder passes when its answer lands within 2 tau of the
stored reference, which an honest device with tolerance-tau access always
does.  The adversary never touches the verifier: it spends a query budget on
the device beforehand, learns a low-degree hypothesis with target accuracy
epsilon = tau, and answers rounds by evaluating the hypothesis offline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import Channel
from .learner import (
    Hypothesis,
    derive_hyperparams,
    estimate_coefficients,
    gather_data,
    predict,
    state_expectations,
)
from .oracle import OracleMode, QPStatOracle
from .paulis import Observable
from .states import SampledState, StateDistribution, sample_state


@dataclass(frozen=True)
class ChallengeRecord:
    challenge_id: int
    state: SampledState
    y: float


@dataclass(frozen=True)
class VerifierState:
    observable: Observable
    tau: float
    records: tuple[ChallengeRecord, ...]


@dataclass(frozen=True)
class ProverState:
    oracle: QPStatOracle


@dataclass(frozen=True)
class AdversaryState:
    hypothesis: Hypothesis
    queries_spent: int
    theoretical_n: int


@dataclass(frozen=True)
class RoundResult:
    challenge_id: int
    reference: float
    response: float
    passed: bool


def setup(
    c: Channel,
    o: Observable,
    tau: float,
    db_size: int,
    d: StateDistribution,
    mode: OracleMode,
    rng: np.random.Generator,
) -> tuple[VerifierState, ProverState]:
    """Fill the verifier database with db_size fresh challenges and hand the
    prover its own oracle over the same channel."""
    if db_size < 1:
        raise ValueError("need at least one challenge")
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    verifier_rng, prover_rng = rng.spawn(2)
    v_oracle = QPStatOracle(c, mode, verifier_rng, tolerance_default=tau)
    records = []
    for i in range(db_size):
        s = sample_state(d, c.n, verifier_rng)
        records.append(ChallengeRecord(i, s, v_oracle.query(s.rho, o, tau)))
    verifier = VerifierState(o, float(tau), tuple(records))
    prover = ProverState(QPStatOracle(c, mode, prover_rng, tolerance_default=tau))
    return verifier, prover


def _passes(v: VerifierState, rec: ChallengeRecord, response: float) -> RoundResult:
    ok = abs(rec.y - response) <= 2.0 * v.tau
    return RoundResult(rec.challenge_id, rec.y, response, ok)


def _draw(v: VerifierState, rng: np.random.Generator) -> ChallengeRecord:
    return v.records[int(rng.integers(0, len(v.records)))]


def honest_round(v: VerifierState, p: ProverState, rng: np.random.Generator) -> RoundResult:
    """Replay a stored challenge against the device itself."""
    rec = _draw(v, rng)
    response = p.oracle.query(rec.state.rho, v.observable, v.tau)
    return _passes(v, rec, response)


def attack_round(v: VerifierState, a: AdversaryState, rng: np.random.Generator) -> RoundResult:
    """Replay a stored challenge against the offline hypothesis."""
    rec = _draw(v, rng)
    paulis = [p for p, _ in a.hypothesis.entries]
    response = predict(a.hypothesis, expectations=state_expectations(rec.state, paulis))
    return _passes(v, rec, response)


def null_round(v: VerifierState, rng: np.random.Generator) -> RoundResult:
    """Baseline responder that always answers the depolarized mean
    tr(O)/2^n, exploiting output concentration with no queries at all."""
    rec = _draw(v, rng)
    d = 1 << v.observable.n
    guess = float(np.trace(v.observable.to_matrix()).real) / d
    return _passes(v, rec, guess)


def mount_attack(
    device: QPStatOracle,
    o: Observable,
    tau: float,
    n: int,
    rng: np.random.Generator,
    *,
    budget: int | None = None,
    delta: float = 0.1,
) -> AdversaryState:
    """Train the forgery hypothesis with epsilon = tau.

    The guarantee-level query count is astronomically conservative, so pass
    an explicit budget for desk-scale runs; the formula value (centered-noise
    sizing, which tolerates tau > eps_tilde) is recorded alongside.
    """
    hp_theory = derive_hyperparams(min(tau, 1.0), n, delta, tau=tau, unbiased=True)
    if budget is None:
        budget = hp_theory.n_queries
    if budget == 0:
        return AdversaryState(Hypothesis(o, hp_theory.k, ()), 0, hp_theory.n_queries)
    before = device.query_count
    data = gather_data(device, n, budget, o, tau, rng)
    hypothesis = estimate_coefficients(data, o, hp_theory.k, hp_theory.epsilon_tilde)
    return AdversaryState(hypothesis, device.query_count - before, hp_theory.n_queries)
