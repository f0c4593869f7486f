"""Command-line drivers: config plumbing, CSV output, end-to-end runs."""

import json
import os

import numpy as np
import pytest

from qpsqlab.cli import (
    BoundsConfig,
    LearnConfig,
    OracleCompareConfig,
    ProtocolConfig,
    config_hash,
    load_config_file,
    main,
    observable_from_config,
    resolve_config,
    write_csv,
)
from qpsqlab.paulis import PauliString


# --- config plumbing ---


def test_resolve_config_defaults():
    cfg = resolve_config("oracle-compare", None, {})
    assert isinstance(cfg, OracleCompareConfig)
    assert cfg.n == 1 and cfg.queries == 100_000 and cfg.seed == 0


def test_resolve_config_precedence():
    cfg = resolve_config(
        "protocol", {"rounds": 17, "seed": 3}, {"seed": 9, "n": None}
    )
    assert cfg.rounds == 17
    assert cfg.seed == 9  # command-line beats file
    assert cfg.n == 4  # untouched default


def test_resolve_config_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config keys"):
        resolve_config("learn", {"sigmaz": [0.1]}, {})


def test_resolve_config_override_ignored_when_absent():
    # bounds has a jobs field, learn does not; a None override never lands
    cfg = resolve_config("bounds", None, {"jobs": 4})
    assert cfg.jobs == 4
    cfg2 = resolve_config("learn", None, {"jobs": 4})
    assert not hasattr(cfg2, "jobs")


def test_load_config_file_json_and_toml(tmp_path):
    j = tmp_path / "c.json"
    j.write_text('{"rounds": 5}')
    assert load_config_file(str(j)) == {"rounds": 5}
    t = tmp_path / "c.toml"
    t.write_text("rounds = 6\n")
    assert load_config_file(str(t)) == {"rounds": 6}


def test_config_hash_stability():
    a = resolve_config("bounds", None, {})
    b = resolve_config("bounds", None, {})
    assert config_hash(a) == config_hash(b)
    c = resolve_config("bounds", {"samples": 7}, {})
    assert config_hash(c) != config_hash(a)
    assert len(config_hash(a)) == 16


def test_observable_from_config_variants():
    o = observable_from_config(None, 3)
    assert o.terms == ((1.0, PauliString.single(3, 0, "Z")),)
    o2 = observable_from_config("XZ", 2)
    assert o2.terms == ((1.0, PauliString.from_label("XZ")),)
    o3 = observable_from_config(
        [{"coeff": 0.5, "pauli": "XX"}, {"coeff": 0.5, "pauli": "ZI"}], 2
    )
    assert len(o3.terms) == 2
    with pytest.raises(ValueError):
        observable_from_config("XZ", 3)  # wrong width
    with pytest.raises(ValueError):
        observable_from_config(42, 2)


# --- CSV writing ---


def test_write_csv_deterministic_text(tmp_path):
    path = str(tmp_path / "t.csv")
    rows = [
        {"a": np.float64(0.1), "b": np.int64(3), "c": "x"},
        {"a": 1.0 / 3.0, "b": 0, "c": "y"},
    ]
    write_csv(path, ["a", "b", "c"], rows)
    raw = open(path, "rb").read()
    text = raw.decode()
    assert "np.float64" not in text
    assert b"\r" not in raw
    lines = text.splitlines()
    assert lines[0] == "a,b,c"
    assert lines[1] == "0.1,3,x"
    assert lines[2] == "0.3333333333333333,0,y"


# --- end-to-end runs (desk-scale configs) ---


def run_cli(tmp_path, name, cfg_dict, seed=0, tag="run"):
    cfg_path = tmp_path / f"{tag}.json"
    cfg_path.write_text(json.dumps(cfg_dict))
    out = tmp_path / tag
    code = main(
        [name, "--config", str(cfg_path), "--seed", str(seed), "--out", str(out)]
    )
    return code, out


SMALL_ORACLE = {"queries": 300, "band": 0.05}
SMALL_LEARN = {
    "n": 2,
    "n_channels": 2,
    "sigmas": [0.2, 0.05],
    "budgets": [0, 800],
    "n_test": 40,
}
SMALL_PROTOCOL = {"n": 2, "db_size": 20, "rounds": 40, "budgets": [0, 1500]}
SMALL_BOUNDS = {
    "n_values": [1, 2],
    "samples": 800,
    "n_pairs": 2,
    "n_boot": 200,
    "spike_n": 2,
    "spike_states": 3,
}


def test_oracle_compare_end_to_end(tmp_path):
    code, out = run_cli(tmp_path, "oracle-compare", SMALL_ORACLE)
    csv_path = out / "oracle-compare.csv"
    assert csv_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header == (
        "query_index,state,truth,gaussian_value,gaussian_error,"
        "shadow_value,shadow_error"
    )
    summary = json.loads((out / "summary.json").read_text())
    assert summary["subcommand"] == "oracle-compare"
    assert set(summary["verdicts"]) == {
        "gaussian_exceedance_in_band",
        "shadow_not_worse",
    }
    assert summary["outputs"]["csv"] == "oracle-compare.csv"


def test_learn_end_to_end(tmp_path):
    code, out = run_cli(tmp_path, "learn", SMALL_LEARN)
    csv_path = out / "learn.csv"
    header = csv_path.read_text().splitlines()[0]
    assert header == "n,distribution,sigma,N,rms"
    summary = json.loads((out / "summary.json").read_text())
    assert "sigma_improves_rms" in summary["verdicts"]
    assert "haar_lowest_at_max_budget" in summary["verdicts"]
    # 3 distributions x 2 sigmas x 2 budgets
    assert len(csv_path.read_text().splitlines()) == 1 + 12


def test_protocol_end_to_end_exact_mode(tmp_path):
    code, out = run_cli(tmp_path, "protocol", SMALL_PROTOCOL)
    csv_path = out / "protocol.csv"
    header = csv_path.read_text().splitlines()[0]
    assert header == "responder,budget,pass_rate,ci_low,ci_high"
    summary = json.loads((out / "summary.json").read_text())
    assert summary["verdicts"]["honest_all_pass"] is True
    rows = csv_path.read_text().splitlines()[1:]
    honest = [r for r in rows if r.startswith("honest")]
    attack = [r for r in rows if r.startswith("attack")]
    assert len(honest) == 1
    assert honest[0].split(",")[2] == "1.0"
    assert len(attack) == len(SMALL_PROTOCOL["budgets"])


def test_bounds_end_to_end(tmp_path):
    code, out = run_cli(tmp_path, "bounds", SMALL_BOUNDS)
    assert code == 0
    csv_path = out / "bounds.csv"
    header = csv_path.read_text().splitlines()[0]
    assert header == (
        "experiment,ensemble,n,detail,estimate,bound,ci_low,ci_high,verdict"
    )
    summary = json.loads((out / "summary.json").read_text())
    assert all(summary["verdicts"].values())


@pytest.mark.parametrize(
    "name,cfg",
    [
        ("oracle-compare", SMALL_ORACLE),
        ("learn", SMALL_LEARN),
        ("protocol", SMALL_PROTOCOL),
        ("bounds", SMALL_BOUNDS),
    ],
)
def test_rerun_is_byte_identical(tmp_path, name, cfg):
    _, out1 = run_cli(tmp_path, name, cfg, seed=5, tag="a")
    _, out2 = run_cli(tmp_path, name, cfg, seed=5, tag="b")
    f1 = (out1 / f"{name}.csv").read_bytes()
    f2 = (out2 / f"{name}.csv").read_bytes()
    assert f1 == f2


def test_different_seed_changes_output(tmp_path):
    _, out1 = run_cli(tmp_path, "protocol", SMALL_PROTOCOL, seed=1, tag="s1")
    _, out2 = run_cli(tmp_path, "protocol", SMALL_PROTOCOL, seed=2, tag="s2")
    b1 = (out1 / "protocol.csv").read_bytes()
    b2 = (out2 / "protocol.csv").read_bytes()
    assert b1 != b2


def test_bounds_jobs_flag_does_not_change_bytes(tmp_path):
    cfg_path = tmp_path / "b.json"
    cfg_path.write_text(json.dumps(SMALL_BOUNDS))
    out1, out2 = tmp_path / "j1", tmp_path / "j2"
    main(["bounds", "--config", str(cfg_path), "--seed", "3", "--out", str(out1)])
    main(
        [
            "bounds", "--config", str(cfg_path), "--seed", "3",
            "--out", str(out2), "--jobs", "2",
        ]
    )
    assert (out1 / "bounds.csv").read_bytes() == (out2 / "bounds.csv").read_bytes()
