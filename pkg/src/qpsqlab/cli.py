"""Command-line drivers for the four desk-scale experiments.

Subcommands:

  oracle-compare   per-query error of the gaussian and shadow oracle modes
  learn            RMS learning curves over noise level and query budget
  protocol         CR-QPUF rounds: honest prover vs. offline forgery vs. null
  bounds           ensemble moment/concentration checks against their bounds

Each run writes <out>/<subcommand>.csv plus <out>/summary.json and exits 0
iff every verdict holds.  All randomness descends from a single SeedSequence
per run, so CSV output is byte-identical for equal seeds and configs
(including across --jobs settings; see bounds).  Config files may be JSON or
TOML; explicit flags override file values, which override defaults.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import norm

from . import bounds as bounds_lab
from .channels import Channel, apply, channel_from_config
from .crqpuf import mount_attack, setup
from .ensembles import haar_unitary, random_pauli
from .learner import (
    Hypothesis,
    derive_hyperparams,
    fit,
)
from .oracle import (
    GaussianMode,
    QPStatOracle,
    ShadowMode,
    chebyshev_shots,
    oracle_mode_from_config,
)
from .paulis import (
    Observable,
    PauliString,
    enumerate_low_degree,
    pauli_expectation,
    pauli_expectation_vec,
)
from .states import (
    EXPECT_LUT,
    STAB_LABELS,
    SampledState,
    StateDistribution,
    expectation,
    sample_state,
)
from .stats import wilson_interval

_PAULI_ROW = {"I": 0, "X": 1, "Y": 2, "Z": 3}


# ---------------------------------------------------------------------------
# configs


@dataclass
class OracleCompareConfig:
    n: int = 1
    queries: int = 100_000
    tau: float = 0.2
    sigma: float = 0.1
    clamp: bool = False
    shadow_shots: int | None = None  # None: Chebyshev-matched to (tau, delta)
    band: float = 0.005
    distribution: str = "stabilizer"
    channel: dict = field(default_factory=lambda: {"kind": "haar"})
    observable: object = None  # None: Z on qubit 0
    seed: int = 0


@dataclass
class LearnConfig:
    n: int = 4
    n_channels: int = 5
    channel: dict = field(default_factory=lambda: {"kind": "haar"})
    observable: object = None
    sigmas: list = field(default_factory=lambda: [0.1, 0.025])
    budgets: list = field(default_factory=lambda: [0, 500, 2500, 20000])
    distributions: list = field(
        default_factory=lambda: ["computational", "stabilizer", "haar"]
    )
    n_test: int = 200
    epsilon: float | None = None  # None: min(1, 2 sigma) per noise level
    delta: float = 0.1
    slack: float = 0.05
    seed: int = 0


@dataclass
class ProtocolConfig:
    n: int = 4
    channel: dict = field(default_factory=lambda: {"kind": "haar"})
    observable: object = None
    oracle: dict = field(default_factory=lambda: {"mode": "exact"})
    tau: float = 0.2
    distribution: str = "stabilizer"
    db_size: int = 100
    rounds: int = 200
    budgets: list = field(default_factory=lambda: [0, 2500, 20000])
    attack_floor: float = 2.0 / 3.0
    delta: float = 0.1
    seed: int = 0


@dataclass
class BoundsConfig:
    ensembles: list = field(default_factory=lambda: ["haar", "clifford"])
    n_values: list = field(default_factory=lambda: [1, 2, 3, 4])
    samples: int = 20_000
    n_pairs: int = 4
    tau: float = 0.5
    n_boot: int = 1000
    spike_n: int = 3
    spike_degree: int = 2
    spike_epsilon: float = 0.25
    spike_states: int = 10
    spike_tol: float = 1e-10
    jobs: int = 1
    seed: int = 0


_CONFIG_TYPES = {
    "oracle-compare": OracleCompareConfig,
    "learn": LearnConfig,
    "protocol": ProtocolConfig,
    "bounds": BoundsConfig,
}


@dataclass
class RunResult:
    columns: list
    rows: list  # list of dicts keyed by column name
    verdicts: dict
    metrics: dict

    @property
    def all_ok(self) -> bool:
        return all(self.verdicts.values())


def load_config_file(path: str) -> dict:
    if path.endswith(".toml"):
        try:
            import tomllib
        except ModuleNotFoundError:  # python 3.10
            import tomli as tomllib
        with open(path, "rb") as f:
            return tomllib.load(f)
    with open(path) as f:
        return json.load(f)


def resolve_config(subcommand: str, file_values: dict | None, overrides: dict):
    cls = _CONFIG_TYPES[subcommand]
    names = {f.name for f in dataclasses.fields(cls)}
    merged = dataclasses.asdict(cls())
    if file_values:
        unknown = set(file_values) - names
        if unknown:
            raise ValueError(f"unknown config keys for {subcommand}: {sorted(unknown)}")
        merged.update(file_values)
    for key, val in overrides.items():
        if val is not None and key in names:
            merged[key] = val
    return cls(**merged)


def config_hash(cfg) -> str:
    blob = json.dumps(dataclasses.asdict(cfg), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def observable_from_config(value, n: int) -> Observable:
    """None -> Z on qubit 0; a Pauli label; or a list of {coeff, pauli}."""
    if value is None:
        return Observable.single_pauli(PauliString.single(n, 0, "Z"))
    if isinstance(value, str):
        p = PauliString.from_label(value)
        if p.n != n:
            raise ValueError(f"observable label {value!r} is not {n} qubits")
        return Observable.single_pauli(p)
    if isinstance(value, list):
        terms = [(float(t["coeff"]), PauliString.from_label(t["pauli"])) for t in value]
        return Observable.from_terms(terms, n=n)
    raise ValueError("observable must be a pauli label or a list of {coeff, pauli}")


# ---------------------------------------------------------------------------
# oracle-compare


def run_oracle_compare(cfg: OracleCompareConfig) -> RunResult:
    n = cfg.n
    root = np.random.SeedSequence(cfg.seed)
    ch_ss, state_ss, g_ss, s_ss = root.spawn(4)
    channel = channel_from_config(cfg.channel, n, np.random.default_rng(ch_ss))
    obs = observable_from_config(cfg.observable, n)
    dist = StateDistribution.parse(cfg.distribution)

    expected = 2.0 * float(norm.sf(cfg.tau / cfg.sigma))
    shots = cfg.shadow_shots
    if shots is None:
        shots = chebyshev_shots(obs, cfg.tau, expected)

    g_oracle = QPStatOracle(
        channel, GaussianMode(cfg.sigma, cfg.clamp), np.random.default_rng(g_ss)
    )
    s_oracle = QPStatOracle(channel, ShadowMode(shots), np.random.default_rng(s_ss))
    state_rng = np.random.default_rng(state_ss)

    rows = []
    g_exceed = s_exceed = 0
    for q in range(cfg.queries):
        s = sample_state(dist, n, state_rng)
        truth = expectation(obs, apply(channel, s.rho))
        gv = g_oracle.query(s.rho, obs, cfg.tau)
        sv = s_oracle.query(s.rho, obs, cfg.tau)
        ge = gv - truth
        se = sv - truth
        if abs(ge) > cfg.tau:
            g_exceed += 1
        if abs(se) > cfg.tau:
            s_exceed += 1
        rows.append(
            {
                "query_index": q,
                "state": s.description,
                "truth": truth,
                "gaussian_value": gv,
                "gaussian_error": ge,
                "shadow_value": sv,
                "shadow_error": se,
            }
        )

    exc_g = g_exceed / cfg.queries
    exc_s = s_exceed / cfg.queries
    verdicts = {
        "gaussian_exceedance_in_band": abs(exc_g - expected) <= cfg.band,
        "shadow_not_worse": exc_s <= exc_g,
    }
    metrics = {
        "expected_exceedance": expected,
        "gaussian_exceedance": exc_g,
        "shadow_exceedance": exc_s,
        "shadow_shots": shots,
        "queries": cfg.queries,
        "gaussian_query_count": g_oracle.query_count,
        "shadow_query_count": s_oracle.query_count,
    }
    columns = [
        "query_index",
        "state",
        "truth",
        "gaussian_value",
        "gaussian_error",
        "shadow_value",
        "shadow_error",
    ]
    return RunResult(columns, rows, verdicts, metrics)


# ---------------------------------------------------------------------------
# learn


def _expectation_table(states: list[SampledState], paulis) -> np.ndarray:
    """Matrix of tr(P rho_t): one row per test state, one column per Pauli."""
    m = np.empty((len(states), len(paulis)))
    if all(s.labels is not None for s in states):
        lab = np.array(
            [[STAB_LABELS.index(l) for l in s.labels] for s in states], dtype=np.intp
        )
        for j, p in enumerate(paulis):
            col = np.ones(len(states))
            for site in p.support:
                col = col * EXPECT_LUT[_PAULI_ROW[p.symbol(site)], lab[:, site]]
            m[:, j] = col
        return m
    for i, s in enumerate(states):
        for j, p in enumerate(paulis):
            if s.vector is not None:
                m[i, j] = pauli_expectation_vec(p, s.vector)
            else:
                m[i, j] = pauli_expectation(p, s.rho.mat)
    return m


def _epsilon_for(cfg: LearnConfig, sigma: float) -> float:
    if cfg.epsilon is not None:
        return cfg.epsilon
    return min(1.0, 2.0 * sigma)


def run_learning_curve(cfg: LearnConfig) -> RunResult:
    n = cfg.n
    obs = observable_from_config(cfg.observable, n)
    dists = [StateDistribution.parse(name) for name in cfg.distributions]
    paulis_all = enumerate_low_degree(n, n)
    col = {p: j for j, p in enumerate(paulis_all)}

    # One hyperparameter schedule per noise level; budgets override N.
    schedule = []
    for sigma in cfg.sigmas:
        eps = _epsilon_for(cfg, sigma)
        hp = derive_hyperparams(eps, n, cfg.delta, tau=2.0 * sigma, unbiased=True)
        schedule.append(hp)

    root = np.random.SeedSequence(cfg.seed)
    ch_seeds = root.spawn(cfg.n_channels)
    # rms sums per (distribution, sigma, budget), averaged over channels
    acc = np.zeros((len(dists), len(cfg.sigmas), len(cfg.budgets)))

    for ci in range(cfg.n_channels):
        draw_ss, train_master, test_master = ch_seeds[ci].spawn(3)
        channel = channel_from_config(cfg.channel, n, np.random.default_rng(draw_ss))
        train_seeds = train_master.spawn(len(cfg.budgets))
        test_seeds = test_master.spawn(len(dists))

        tables = []
        truths = []
        for di, d in enumerate(dists):
            rng = np.random.default_rng(test_seeds[di])
            states = [sample_state(d, n, rng) for _ in range(cfg.n_test)]
            tables.append(_expectation_table(states, paulis_all))
            truths.append(
                np.array([expectation(obs, apply(channel, s.rho)) for s in states])
            )

        for bi, budget in enumerate(cfg.budgets):
            state_ss, noise_ss = train_seeds[bi].spawn(2)
            for si, sigma in enumerate(cfg.sigmas):
                hp = dataclasses.replace(schedule[si], n_queries=int(budget))
                if budget == 0:
                    hyp = Hypothesis(obs, hp.k, ())
                else:
                    # Fresh generators from the same seeds for every sigma:
                    # identical training states and identical standard
                    # normals, so the noise levels differ only by scale.
                    oracle = QPStatOracle(
                        channel, GaussianMode(sigma), np.random.default_rng(noise_ss)
                    )
                    hyp = fit(oracle, obs, hp, np.random.default_rng(state_ss))
                alpha = np.zeros(len(paulis_all))
                for p, a in hyp.entries:
                    alpha[col[p]] = a
                for di in range(len(dists)):
                    err = tables[di] @ alpha - truths[di]
                    acc[di, si, bi] += float(np.sqrt(np.mean(err * err)))

    acc /= cfg.n_channels
    rows = []
    for di, d in enumerate(dists):
        for si, sigma in enumerate(cfg.sigmas):
            for bi, budget in enumerate(cfg.budgets):
                rows.append(
                    {
                        "n": n,
                        "distribution": d.kind,
                        "sigma": sigma,
                        "N": int(budget),
                        "rms": float(acc[di, si, bi]),
                    }
                )

    bi_max = int(np.argmax(cfg.budgets))
    si_min = int(np.argmin(cfg.sigmas))
    si_max = int(np.argmax(cfg.sigmas))
    verdicts = {}
    if len(cfg.sigmas) >= 2:
        verdicts["sigma_improves_rms"] = all(
            acc[di, si_min, bi_max] <= acc[di, si_max, bi_max] + cfg.slack
            for di in range(len(dists))
        )
    kinds = [d.kind for d in dists]
    if "haar" in kinds and len(kinds) >= 2:
        hi = kinds.index("haar")
        others = [di for di in range(len(dists)) if di != hi]
        verdicts["haar_lowest_at_max_budget"] = all(
            acc[hi, si_min, bi_max] <= acc[di, si_min, bi_max] for di in others
        )

    metrics = {
        "budgets": [int(b) for b in cfg.budgets],
        "n_channels": cfg.n_channels,
        "schedule": {
            str(float(sigma)): {
                "epsilon": hp.epsilon,
                "tau": hp.tau,
                "k": hp.k,
                "k_eff": hp.effective_degree(n),
                "epsilon_tilde": hp.epsilon_tilde,
                "theory_n_queries": hp.n_queries,
            }
            for sigma, hp in zip(cfg.sigmas, schedule)
        },
        "rms_at_max_budget": {
            d.kind: {
                str(float(sigma)): float(acc[di, si, bi_max])
                for si, sigma in enumerate(cfg.sigmas)
            }
            for di, d in enumerate(dists)
        },
    }
    columns = ["n", "distribution", "sigma", "N", "rms"]
    return RunResult(columns, rows, verdicts, metrics)


# ---------------------------------------------------------------------------
# protocol


def run_protocol_bench(cfg: ProtocolConfig) -> RunResult:
    n = cfg.n
    obs = observable_from_config(cfg.observable, n)
    mode = oracle_mode_from_config(cfg.oracle)
    dist = StateDistribution.parse(cfg.distribution)

    root = np.random.SeedSequence(cfg.seed)
    ch_ss, setup_ss, chal_ss, honest_ss, attack_master = root.spawn(5)
    channel = channel_from_config(cfg.channel, n, np.random.default_rng(ch_ss))
    verifier, prover = setup(
        channel, obs, cfg.tau, cfg.db_size, dist, mode, np.random.default_rng(setup_ss)
    )

    # One frozen challenge schedule, replayed against every responder.
    idx = np.random.default_rng(chal_ss).integers(0, cfg.db_size, size=cfg.rounds)
    gate = 2.0 * cfg.tau

    # honest_ss is reserved in the spawn layout for future responders; the
    # prover's noise comes from its own oracle generator set up above.
    del honest_ss
    honest_pass = 0
    for i in idx:
        rec = verifier.records[int(i)]
        resp = prover.oracle.query(rec.state.rho, obs, cfg.tau)
        if abs(rec.y - resp) <= gate:
            honest_pass += 1

    guess = float(np.trace(obs.to_matrix()).real) / (1 << n)
    null_pass = sum(
        1 for i in idx if abs(verifier.records[int(i)].y - guess) <= gate
    )

    attack_seeds = attack_master.spawn(len(cfg.budgets))
    rows = []
    attack_rates = {}
    attack_cis = {}
    spent = {}
    theory_n = None
    h_lo, h_hi = wilson_interval(honest_pass, cfg.rounds)
    n_lo, n_hi = wilson_interval(null_pass, cfg.rounds)
    for responder, passes, lo, hi in (
        ("honest", honest_pass, h_lo, h_hi),
        ("null", null_pass, n_lo, n_hi),
    ):
        rows.append(
            {
                "responder": responder,
                "budget": 0,
                "pass_rate": passes / cfg.rounds,
                "ci_low": lo,
                "ci_high": hi,
            }
        )
    for bi, budget in enumerate(cfg.budgets):
        dev_ss, gather_ss = attack_seeds[bi].spawn(2)
        device = QPStatOracle(
            channel, mode, np.random.default_rng(dev_ss), tolerance_default=cfg.tau
        )
        adv = mount_attack(
            device,
            obs,
            cfg.tau,
            n,
            np.random.default_rng(gather_ss),
            budget=int(budget),
            delta=cfg.delta,
        )
        theory_n = adv.theoretical_n
        paulis = [p for p, _ in adv.hypothesis.entries]
        alphas = np.array([a for _, a in adv.hypothesis.entries])
        # Hypothesis values on the whole database at once, then replay.
        if paulis:
            db_table = _expectation_table([r.state for r in verifier.records], paulis)
            responses = db_table @ alphas
        else:
            responses = np.zeros(cfg.db_size)
        attack_pass = 0
        for i in idx:
            rec = verifier.records[int(i)]
            if abs(rec.y - float(responses[int(i)])) <= gate:
                attack_pass += 1
        a_lo, a_hi = wilson_interval(attack_pass, cfg.rounds)
        attack_rates[str(int(budget))] = attack_pass / cfg.rounds
        attack_cis[int(budget)] = (a_lo, a_hi)
        spent[str(int(budget))] = adv.queries_spent
        rows.append(
            {
                "responder": "attack",
                "budget": int(budget),
                "pass_rate": attack_pass / cfg.rounds,
                "ci_low": a_lo,
                "ci_high": a_hi,
            }
        )

    max_budget = max(int(b) for b in cfg.budgets)
    verdicts = {
        "attack_beats_threshold": attack_rates[str(max_budget)] >= cfg.attack_floor
    }
    ordered = sorted(int(b) for b in cfg.budgets)
    monotone = True
    for prev, cur in zip(ordered, ordered[1:]):
        lo_p, hi_p = attack_cis[prev]
        lo_c, hi_c = attack_cis[cur]
        slack = (hi_p - lo_p) / 2.0 + (hi_c - lo_c) / 2.0
        if attack_rates[str(cur)] < attack_rates[str(prev)] - slack:
            monotone = False
    verdicts["attack_monotone_up_to_ci"] = monotone
    if cfg.oracle.get("mode", "exact") == "exact":
        verdicts["honest_all_pass"] = honest_pass == cfg.rounds

    metrics = {
        "honest_rate": honest_pass / cfg.rounds,
        "null_rate": null_pass / cfg.rounds,
        "attack_rates": attack_rates,
        "queries_spent": spent,
        "theory_n_queries": theory_n,
        "db_size": cfg.db_size,
        "rounds": cfg.rounds,
        "tau": cfg.tau,
    }
    columns = ["responder", "budget", "pass_rate", "ci_low", "ci_high"]
    return RunResult(columns, rows, verdicts, metrics)


# ---------------------------------------------------------------------------
# bounds


def run_bounds_suite(cfg: BoundsConfig) -> RunResult:
    root = np.random.SeedSequence(cfg.seed)
    n_var = len(cfg.ensembles) * len(cfg.n_values)
    total = n_var + 1 + len(cfg.ensembles) + 1
    children = root.spawn(total)
    it = iter(children)

    reports = []
    for ens in cfg.ensembles:
        for n in cfg.n_values:
            rng = np.random.default_rng(next(it))
            pairs = []
            for _ in range(cfg.n_pairs):
                psi = haar_unitary(n, rng)[:, 0]
                pairs.append((psi, random_pauli(n, rng)))
            reports.append(
                bounds_lab.variance_experiment(
                    ens, n, pairs, cfg.samples, rng, n_boot=cfg.n_boot, jobs=cfg.jobs
                )
            )

    rng = np.random.default_rng(next(it))
    reports.append(
        bounds_lab.concentration_experiment(
            list(cfg.n_values), cfg.tau, cfg.samples, rng, jobs=cfg.jobs
        )
    )

    n_top = max(cfg.n_values)
    for ens in cfg.ensembles:
        rng = np.random.default_rng(next(it))
        reports.append(
            bounds_lab.mean_channel_check(ens, n_top, cfg.samples, rng, jobs=cfg.jobs)
        )

    rng = np.random.default_rng(next(it))
    spike_paulis = enumerate_low_degree(cfg.spike_n, cfg.spike_degree)
    reports.append(
        bounds_lab.spike_distinguish_check(
            cfg.spike_n,
            cfg.spike_epsilon,
            spike_paulis,
            rng,
            n_states=cfg.spike_states,
            tol=cfg.spike_tol,
        )
    )

    merged = reports[0]
    for r in reports[1:]:
        merged = merged.merged(r)

    rows = [
        {
            "experiment": c.experiment,
            "ensemble": c.ensemble,
            "n": c.n,
            "detail": c.detail,
            "estimate": c.estimate,
            "bound": c.bound,
            "ci_low": c.ci_low,
            "ci_high": c.ci_high,
            "verdict": c.verdict,
        }
        for c in merged.checks
    ]
    by_experiment = {}
    for c in merged.checks:
        by_experiment.setdefault(c.experiment, []).append(c.verdict)
    verdicts = {
        f"{name.replace('-', '_')}_ok": all(v == "pass" for v in vs)
        for name, vs in sorted(by_experiment.items())
    }
    metrics = {
        "checks": len(merged.checks),
        "failures": sum(1 for c in merged.checks if c.verdict == "fail"),
        "samples": cfg.samples,
    }
    columns = [
        "experiment",
        "ensemble",
        "n",
        "detail",
        "estimate",
        "bound",
        "ci_low",
        "ci_high",
        "verdict",
    ]
    return RunResult(columns, rows, verdicts, metrics)


# ---------------------------------------------------------------------------
# entry point


_RUNNERS = {
    "oracle-compare": run_oracle_compare,
    "learn": run_learning_curve,
    "protocol": run_protocol_bench,
    "bounds": run_bounds_suite,
}


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(float(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def write_csv(path: str, columns: list, rows: list) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r[c]) for c in columns])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpsqlab",
        description="Desk-scale experiments for learning quantum processes "
        "from statistical queries.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "oracle-compare": "compare gaussian and shadow oracle error per query",
        "learn": "RMS learning curves over noise level and query budget",
        "protocol": "CR-QPUF honest/attack/null pass rates over attack budgets",
        "bounds": "ensemble variance, concentration, mean, and spike checks",
    }
    for name in _RUNNERS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--config", default=None, help="JSON or TOML config file")
        sp.add_argument("--seed", type=int, default=None, help="master seed")
        sp.add_argument("--out", default=None, help="output directory")
        sp.add_argument("--n", type=int, default=None, help="qubit count override")
        sp.add_argument(
            "--jobs",
            type=int,
            default=None,
            help="worker processes (bounds only; results are jobs-independent)",
        )
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    name = args.subcommand
    file_values = load_config_file(args.config) if args.config else None
    overrides = {"seed": args.seed, "n": args.n, "jobs": args.jobs}
    cfg = resolve_config(name, file_values, overrides)

    out_dir = args.out if args.out is not None else f"results/{name}"
    os.makedirs(out_dir, exist_ok=True)

    start = time.perf_counter()
    result = _RUNNERS[name](cfg)
    elapsed = time.perf_counter() - start

    csv_path = os.path.join(out_dir, f"{name}.csv")
    write_csv(csv_path, result.columns, result.rows)
    summary = {
        "subcommand": name,
        "seed": cfg.seed,
        "config": dataclasses.asdict(cfg),
        "config_hash": config_hash(cfg),
        "verdicts": result.verdicts,
        "metrics": result.metrics,
        "outputs": {"csv": os.path.basename(csv_path)},
        "wall_time_s": round(elapsed, 3),
    }
    with open(os.path.join(out_dir, "summary.json"), "w") as f:
        json.dump(summary, f, indent=2, sort_keys=True)
        f.write("\n")

    for key, ok in result.verdicts.items():
        print(f"{key}: {'ok' if ok else 'FAIL'}")
    print(f"wrote {csv_path} ({len(result.rows)} rows, {elapsed:.1f}s)")
    if not result.all_ok:
        failed = [k for k, v in result.verdicts.items() if not v]
        print(f"FAIL: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
