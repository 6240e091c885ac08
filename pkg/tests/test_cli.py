import json
import re
import subprocess
import sys

import pytest

from matroidlab.cli import (ExperimentConfig, Report, emit_plot_data,
                            run_experiment)
from matroidlab.errors import InvalidInputError
from matroidlab.fileio import save_function, save_graph, save_matroid
from matroidlab.matroid import (canonical_function, cycle_graph, graphic_from_graph,
                                named_graph)


def run_cli(*args, **kwargs):
    return subprocess.run([sys.executable, "-m", "matroidlab", *args],
                          capture_output=True, text=True, **kwargs)


@pytest.fixture
def workdir(tmp_path):
    g = cycle_graph(3)
    save_graph(tmp_path / "k3.graph", g)
    m = graphic_from_graph(g)
    save_matroid(tmp_path / "k3.matroid", m)
    save_function(tmp_path / "canon.boolfn", canonical_function(m, 4))
    return tmp_path


def strip_runtime(text):
    return re.sub(r'"runtime_ms": \d+', '"runtime_ms": X', text)


def test_graphic_and_canonical_files(workdir):
    out = workdir / "m.matroid"
    r = run_cli("graphic", "--graph", str(workdir / "k3.graph"), "--out", str(out))
    assert r.returncode == 0
    assert out.read_text() == "matroid v1\nm=3 k=3\n110\n101\n011\n"

    fn = workdir / "f.boolfn"
    r = run_cli("canonical", "--matroid", str(out), "-n", "4", "--out", str(fn))
    assert r.returncode == 0
    assert fn.read_text() == (workdir / "canon.boolfn").read_text()


def test_free_exit_codes(workdir):
    r = run_cli("free", "--function", str(workdir / "canon.boolfn"),
                "--matroid", str(workdir / "k3.matroid"), "--sigma", "111")
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"]["free"] is False

    r = run_cli("free", "--function", str(workdir / "canon.boolfn"),
                "--matroid", str(workdir / "k3.matroid"), "--sigma", "111",
                "--assert-free")
    assert r.returncode == 2


def test_budget_exit_code(workdir):
    save_matroid(workdir / "k5.matroid", graphic_from_graph(named_graph("k5")))
    from matroidlab.boolfn import BooleanFunction
    save_function(workdir / "big.boolfn", BooleanFunction.constant(8, 1))
    r = run_cli("free", "--function", str(workdir / "big.boolfn"),
                "--matroid", str(workdir / "k5.matroid"), "--sigma", "1111111111")
    assert r.returncode == 3
    assert "budget" in r.stderr


def test_malformed_input_exit_code(workdir):
    bad = workdir / "bad.graph"
    bad.write_text("graph v2\nV=3\n")
    r = run_cli("graphic", "--graph", str(bad), "--out", str(workdir / "x.matroid"))
    assert r.returncode == 4
    r = run_cli("graphic", "--graph", str(workdir / "missing.graph"),
                "--out", str(workdir / "x.matroid"))
    assert r.returncode == 4
    r = run_cli("nonsense-command")
    assert r.returncode == 4


def test_report_determinism(workdir):
    args = ("test", "--calibrate", "-n", "6", "--samples", "2000",
            "--buckets", "3", "--seed", "42")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert strip_runtime(a.stdout) == strip_runtime(b.stdout)
    c = run_cli(*args[:-1], "43")
    assert strip_runtime(c.stdout) != strip_runtime(a.stdout)


def test_report_shape_and_sorted_keys(workdir):
    r = run_cli("count", "--function", str(workdir / "canon.boolfn"),
                "--matroid", str(workdir / "k3.matroid"), "--sigma", "111",
                "--seed", "9")
    doc = json.loads(r.stdout)
    assert set(doc) == {"experiment", "params", "results", "runtime_ms",
                        "seed", "version"}
    assert doc["seed"] == 9
    assert doc["results"]["span_count"]["exact"] is True
    # serialized with sorted keys
    assert r.stdout == json.dumps(doc, sort_keys=True, indent=2) + "\n"


def test_workers_env_validation(workdir):
    r = run_cli("complexity", "--sweep", "--graphs", "c3",
                env={"MATROIDLAB_WORKERS": "0", "PATH": "/usr/bin:/bin:/usr/local/bin"})
    assert r.returncode == 4


def test_plot_data(workdir):
    cfg = ExperimentConfig("tester-calibration",
                           params={"n": 6, "samples": 1000, "buckets": 3}, seed=3)
    report = run_experiment(cfg)
    text = emit_plot_data(report)
    lines = text.strip().split("\n")
    assert lines[0] == "distance_bucket\tempirical_rate\texact_density"
    assert len(lines) == 4


def test_plot_data_header_only_and_missing():
    empty = Report("tester-calibration", {}, {"series": {
        "columns": ["a", "b"], "exact_columns": [True, True], "rows": []}},
        0, 0, "0.1.0")
    assert emit_plot_data(empty) == "a\tb\n"
    bare = Report("count", {}, {}, 0, 0, "0.1.0")
    with pytest.raises(InvalidInputError):
        emit_plot_data(bare)


def test_run_experiment_unknown():
    with pytest.raises(InvalidInputError):
        run_experiment(ExperimentConfig("warp-drive"))


def test_hierarchy_cycles_report_keys(workdir):
    r = run_cli("hierarchy", "--kind", "cycles", "-k", "3", "-n", "7", "--seed", "1")
    doc = json.loads(r.stdout)
    res = doc["results"]
    assert res["c5_canonical_contains_c5"] is True
    assert res["c3_free"] is True
    assert res["hitting_number"]["value"] >= 4
