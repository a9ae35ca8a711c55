import json
import subprocess
import sys

import pytest

from ogqh import cli, verify
from ogqh.lgbridge import _IntResidual
from ogqh.ogring import admissible_degree, gw
from ogqh.partitions import strict_partitions
from ogqh.report import IdentityReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, want", [
    (("qprod", "--n", "2", "--lhs", "2", "--rhs", "2"), "q"),
    (("qprod", "--n", "2", "--lhs", "2,1", "--rhs", "2,1"), "τ[2]·q"),
    (("qprod", "--n", "3", "--lhs", "1", "--rhs", ""), "τ[1]"),
    (("gw", "--n", "2", "--d", "1", "--a", "2", "--b", "2", "--c", "2,1"), "1"),
    (("pieri", "--n", "2", "--lam", "2,1", "--k", "1"), "q"),
    (("lggw", "--n", "2", "--e", "1", "--a", "1", "--b", "1", "--c", "1"), "1"),
    (("poly", "--n", "2", "--nu", "2,1"), "x1^2*x2 + x1*x2^2"),
    (("poly", "--n", "2", "--nu", "1,1", "--ptilde"), "2^-2*(x1^2 + x2^2)"),
])
def test_commands(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == want


def test_gw_against_product(capsys):
    code, out, _ = run(capsys, "gw", "--n", "3", "--d", "0", "--a", "2,1", "--b", "3", "--c", "")
    assert code == 0
    assert int(out) == gw((2, 1), (3,), (), 0, 3)


def test_point_class_query_is_admissible(capsys):
    code, out, _ = run(capsys, "gw", "--n", "3", "--d", "0", "--a", "3,2,1", "--b", "", "--c", "")
    assert (code, out.strip()) == (0, "1")


def test_inadmissible_exit_code(capsys):
    code, _, err = run(capsys, "gw", "--n", "3", "--d", "1", "--a", "3,2,1", "--b", "", "--c", "")
    assert code == 3 and "inadmissible" in err
    code, _, _ = run(capsys, "lggw", "--n", "4", "--e", "1", "--a", "2,1", "--b", "2,1",
                     "--c", "2,1")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ("qprod", "--n", "3", "--lhs", "2,2", "--rhs", "1"),
    ("qprod", "--n", "3", "--lhs", "x", "--rhs", "1"),
    ("qprod", "--n", "3", "--lhs", "4", "--rhs", "1"),
    ("pieri", "--n", "3", "--lam", "1", "--k", "4"),
])
def test_parse_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_json_output_is_stable(capsys):
    argv = ("qprod", "--n", "3", "--lhs", "3,1", "--rhs", "3,2", "--json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    data = json.loads(first)
    assert data["n"] == 3
    keys = [(t["d"], t["nu"]) for t in data["terms"]]
    assert keys == sorted(keys)


@pytest.mark.parametrize("suite, n_max", [("identities", 4), ("ring", 3), ("lg", 3)])
def test_verify_suites(capsys, suite, n_max):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--n-max", str(n_max))
    assert code == 0
    assert out.strip().endswith("checks passed")


def test_verify_json_and_jobs(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ring", "--n-max", "3", "--json")
    serial = json.loads(out)
    code2, out2, _ = run(capsys, "verify", "--suite", "ring", "--n-max", "3", "--json",
                         "--jobs", "2")
    assert code == code2 == 0
    assert json.loads(out2) == serial
    assert all(set(r) == {"identity", "params", "pass", "residual_terms"} for r in serial)


def _failing(n_max):
    return [(IdentityReport, ("planted", {"n": n_max}, _IntResidual(1)))]


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(verify.SUITES, "planted", _failing)
    code, out, _ = run(capsys, "verify", "--suite", "planted", "--n-max", "2", "--show-poly")
    assert code == 4
    assert "FAIL planted(n=2)" in out and "residual: 1" in out


def _brute_table(n, d_max):
    parts = strict_partitions(n)
    rows = []
    for i, a in enumerate(parts):
        for j in range(i, len(parts)):
            for k in range(j, len(parts)):
                b, c = parts[j], parts[k]
                d = admissible_degree(a, b, c, n)
                if d is not None and d <= d_max:
                    rows.append((a, b, c, d))
    return rows


def test_table_json_roundtrip(capsys, tmp_path):
    out = tmp_path / "t.json"
    code, msg, _ = run(capsys, "table", "--n", "2", "--d-max", "1", "--out", str(out))
    assert code == 0 and "wrote" in msg
    data = cli.load_table(out)
    rows = data["invariants"]
    assert sorted((tuple(r["a"]), tuple(r["b"]), tuple(r["c"]), r["d"]) for r in rows) == \
        sorted(_brute_table(2, 1))
    for r in rows:
        assert r["value"] == gw(r["a"], r["b"], r["c"], r["d"], 2)


def test_table_csv_roundtrip(capsys, tmp_path):
    out = tmp_path / "t.csv"
    code, _, _ = run(capsys, "table", "--n", "3", "--d-max", "1", "--out", str(out), "--csv",
                     "--jobs", "2")
    assert code == 0
    rows = cli.load_table(out)["invariants"]
    assert len(rows) == len(_brute_table(3, 1))
    for r in rows:
        assert r["value"] == gw(r["a"], r["b"], r["c"], r["d"], 3)


def test_table_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "table", "--n", "2", "--d-max", "0",
                       "--out", str(tmp_path / "missing" / "t.json"))
    assert code == 1 and "missing" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ogqh", "qprod", "--n", "2", "--lhs", "2",
                           "--rhs", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q"
