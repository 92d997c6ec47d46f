"""Command-line interface: CSV/JSON round-trips, atomic writes, determinism,
and the repro report format."""
import csv
import json
import math
import os

import numpy as np
import pytest

from eulerstrip import generate_primes, solve_zero, zeta
from eulerstrip.cli import main


def _read_csv(path):
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    return rows[0], rows[1:]


def test_primes_csv_roundtrip(tmp_path):
    out = tmp_path / "primes.csv"
    assert main(["primes", "--count", "50", "--out", str(out)]) == 0
    header, rows = _read_csv(str(out))
    assert header == ["n", "p_n", "gap"]
    table = generate_primes(50)
    assert [int(r[1]) for r in rows] == table.primes.tolist()
    assert [int(r[2]) for r in rows[:-1]] == table.gaps.tolist()
    assert rows[-1][2] == ""


def test_character_csv(tmp_path):
    out = tmp_path / "chi.csv"
    assert main(["character", "--modulus", "7", "--index", "2", "--out", str(out)]) == 0
    header, rows = _read_csv(str(out))
    assert header == ["n", "re_chi", "im_chi", "turns"]
    assert len(rows) == 7
    assert rows[6][3] == "1/2"  # chi(6) = -1
    assert rows[0][3] == ""  # chi(0) = 0
    # chi(3) = e^{i pi / 3}
    assert float(rows[3][1]) == pytest.approx(0.5, abs=1e-15)
    assert float(rows[3][2]) == pytest.approx(math.sin(math.pi / 3), abs=1e-15)


def test_eval_json(tmp_path):
    out = tmp_path / "eval.json"
    assert main(["eval", "--sigma", "2.0", "--t", "0.0", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["re"] == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert data["im"] == 0.0
    assert data["est_error"] <= 1e-12


def test_eval_l_function(tmp_path):
    out = tmp_path / "eval.json"
    assert main([
        "eval", "--sigma", "0.95", "--t", "100.0",
        "--modulus", "7", "--index", "2", "--out", str(out),
    ]) == 0
    data = json.loads(out.read_text())
    assert complex(data["re"], data["im"]) == pytest.approx(
        complex(0.59836701459500721, 0.16616850233525132), abs=1e-11
    )


def test_euler_product_checkpoints(tmp_path):
    out = tmp_path / "ep.csv"
    assert main([
        "euler-product", "--sigma", "0.95", "--t", "100.0", "--n", "1000",
        "--checkpoints", "10,100,1000", "--out", str(out),
    ]) == 0
    header, rows = _read_csv(str(out))
    assert [r[0] for r in rows] == ["10", "100", "1000"]
    # frozen six-figure reference value at N = 1000
    assert float(rows[-1][3]) == pytest.approx(1.694894, abs=2e-6)
    assert float(rows[-1][6]) == pytest.approx(1.690988, abs=2e-6)


def test_rwp_trace_csv(tmp_path):
    out = tmp_path / "rwp.csv"
    assert main(["rwp", "--t", "0.0", "--n", "10", "--out", str(out)]) == 0
    header, rows = _read_csv(str(out))
    assert header == ["n", "b", "B"]
    assert [float(r[2]) for r in rows] == list(range(1, 11))


def test_rwp_ensemble_json_and_hist(tmp_path):
    out = tmp_path / "ens.json"
    hist = tmp_path / "hist.csv"
    assert main([
        "rwp-ensemble", "--t", "100.0", "--n", "500", "--e", "400",
        "--seed", "9", "--out", str(out), "--out-hist", str(hist),
    ]) == 0
    data = json.loads(out.read_text())
    assert data["seed"] == 9 and data["e"] == 400
    _, rows = _read_csv(str(hist))
    assert sum(int(r[1]) for r in rows) == 400
    # determinism: same seed, same stats
    out2 = tmp_path / "ens2.json"
    main([
        "rwp-ensemble", "--t", "100.0", "--n", "500", "--e", "400",
        "--seed", "9", "--out", str(out2),
    ])
    assert json.loads(out2.read_text())["mean"] == data["mean"]


def test_zero_json(tmp_path):
    out = tmp_path / "zero.json"
    assert main(["zero", "--n", "1", "--primes", "2000", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["n"] == 1
    assert data["t"] == pytest.approx(14.134725, abs=0.15)
    ref = solve_zero(1, N_primes=2000)
    assert data["t"] == ref.t  # 17-digit float round-trip through JSON


def test_zeros_batch_csv(tmp_path):
    out = tmp_path / "zeros.csv"
    assert main([
        "zeros", "--from", "1", "--to", "5", "--primes", "2000", "--out", str(out),
    ]) == 0
    _, rows = _read_csv(str(out))
    ts = [float(r[1]) for r in rows]
    assert len(ts) == 5
    assert all(a < b for a, b in zip(ts, ts[1:]))


def test_counting_csv(tmp_path):
    out = tmp_path / "count.csv"
    assert main([
        "counting", "--t-max", "30.0", "--step", "1.0", "--out", str(out),
    ]) == 0
    _, rows = _read_csv(str(out))
    assert len(rows) == 30
    by_T = {float(r[0]): float(r[1]) for r in rows}
    assert round(by_T[10.0]) == 0
    assert round(by_T[20.0]) == 1
    assert round(by_T[30.0]) == 3


def test_atomic_write_leaves_no_temp_files(tmp_path):
    out = tmp_path / "p.csv"
    main(["primes", "--count", "10", "--out", str(out)])
    assert os.listdir(tmp_path) == ["p.csv"]


def test_repro_zero_budget(tmp_path):
    out = tmp_path / "r.json"
    assert main(["repro", "fig1", "--budget", "zero", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["target"] == "fig1"
    assert data["rows"] == []
    assert data["overall"] is True


def test_repro_fig3_passes(tmp_path):
    out = tmp_path / "r.json"
    assert main(["repro", "fig3", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["overall"] is True
    for row in data["rows"]:
        assert row["pass"] is True or row["pass"] == "skipped"


def test_repro_unknown_target():
    with pytest.raises(SystemExit):
        main(["repro", "fig99"])


def test_repro_writes_artifacts(tmp_path):
    out = tmp_path / "r.json"
    art = tmp_path / "artifacts"
    assert main(["repro", "fig3", "--out", str(out), "--out-dir", str(art)]) == 0
    assert any(p.endswith(".csv") for p in os.listdir(art))


def test_config_file_is_validated(tmp_path):
    bad = tmp_path / "cfg.toml"
    bad.write_text("no_such_knob = 1\n")
    with pytest.raises(Exception):
        main(["--config", str(bad), "primes", "--count", "5"])


def test_stdout_default(capsys):
    assert main(["primes", "--count", "3"]) == 0
    captured = capsys.readouterr().out.splitlines()
    assert captured[0] == "n,p_n,gap"
    assert captured[1].startswith("1,2,")
