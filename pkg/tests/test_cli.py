import json
import os
import subprocess
import sys
from importlib import resources

import pytest

from k3w import cli
from k3w.report import DISCREPANCY, FAIL, PASS, Recorder


def run(*argv):
    return cli.main(list(argv))


@pytest.mark.parametrize("suite", ["golay", "quadric", "kummer"])
def test_verify_suite_passes(suite, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run("verify", suite, "--report", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["suite"] == suite and doc["status"] == "pass"
    assert all({"id", "anchor", "status", "expected", "actual", "witness"} <= set(c) for c in doc["checks"])
    assert "elapsed_ms" in doc


def test_discrepancies_do_not_fail(capsys):
    assert run("verify", "abelian", "--quiet") == 0
    cap = capsys.readouterr().out
    assert "PASS" in cap


@pytest.mark.parametrize(
    "fault,suite,check",
    [("octad", "golay", "steiner-5-cover"), ("line", "fermat", "lines-contained"), ("table-cell", "abelian", "tables-240")],
)
def test_faults_exit_one(fault, suite, check, capsys):
    assert run("verify", suite, "--fault", fault, "--no-timings") == 1
    cap = capsys.readouterr().out
    assert f"{suite}:{check}" in cap and "FAIL" in cap


def test_report_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("verify", "golay", "--no-timings", "--report", str(a)) == 0
    assert run("verify", "golay", "--no-timings", "--report", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "elapsed_ms" not in json.loads(a.read_text())


def test_parallel_matches_serial(tmp_path):
    reps = cli.run_verify(["golay", "quadric"], jobs=1), cli.run_verify(["golay", "quadric"], jobs=2)
    assert [[c.as_dict() for c in r.checks] for r in reps[0]] == [[c.as_dict() for c in r.checks] for r in reps[1]]


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as e:
        run("verify", "nonsense")
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run("export", "--what", "octads", "--format", "dot")  # missing --out
    assert e.value.code == 2
    assert run("export", "--what", "octads", "--format", "dot", "--out", str(tmp_path / "x")) == 2
    assert run("verify", "abelian", "--tables", str(tmp_path / "missing.csv")) == 2
    assert run("export", "--what", "octads", "--format", "csv", "--out", str(tmp_path / "no" / "dir.csv")) == 2


def test_tables_export_matches_fixture(tmp_path):
    out = tmp_path / "t.csv"
    assert run("export", "--what", "tables", "--format", "csv", "--out", str(out)) == 0
    fixture = resources.files("k3w.data").joinpath("four_torsion_tables.csv").read_text()
    assert out.read_text() == fixture


def test_custom_tables_file(tmp_path, capsys):
    fixture = resources.files("k3w.data").joinpath("four_torsion_tables.csv").read_text()
    lines = fixture.splitlines()
    row = lines[1].split(",")
    row[1] = "1" if row[1] != "1" else "2"
    lines[1] = ",".join(row)
    bad = tmp_path / "bad.csv"
    bad.write_text("\n".join(lines) + "\n")
    assert run("verify", "abelian", "--tables", str(bad), "--quiet") == 1


@pytest.mark.parametrize(
    "what,fmt", [("octads", "json"), ("roots", "dot"), ("lines", "csv"), ("incidence", "json"), ("incidence", "dot")]
)
def test_exports(what, fmt, tmp_path):
    out = tmp_path / f"x.{fmt}"
    assert run("export", "--what", what, "--format", fmt, "--out", str(out)) == 0
    text = out.read_text()
    if fmt == "json":
        json.loads(text)
    elif fmt == "dot":
        assert text.startswith("graph ") and text.count(" -- ") == 1680


def test_iso_command(tmp_path):
    out = tmp_path / "m.json"
    assert run("iso", "--left", "leech", "--right", "kummer", "--out", str(out)) == 0
    m = json.loads(out.read_text())["mapping"]
    assert sorted(m.values()) == list(range(112))


def test_recorder_statuses():
    r = Recorder("x")
    r.eq("a", "", 1, lambda: 1)
    r.eq("b", "", 1, lambda: 1 / 0)
    r.true("c", "", lambda: (False, "w"))
    r.note("d", "", 1, 2, "printed")
    rep = r.done()
    assert [c.status for c in rep.checks] == [PASS, FAIL, FAIL, DISCREPANCY]
    assert not rep.ok and [c.id for c in rep.failing()] == ["b", "c"]


def test_module_entry_point_and_backend_switch():
    env = dict(os.environ, K3W_PURE_PYTHON="1")
    p = subprocess.run(
        [sys.executable, "-c", "from k3w._kernels import BACKEND; print(BACKEND)"], capture_output=True, text=True, env=env
    )
    assert p.stdout.strip() == "python"
    p = subprocess.run([sys.executable, "-m", "k3w.cli", "--version"], capture_output=True, text=True)
    assert p.returncode == 0 and "k3w" in p.stdout
