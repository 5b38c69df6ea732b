from __future__ import annotations

import json
import subprocess
import sys

import pytest

from wienerlab import wiener
from wienerlab.cli import UsageError, main, parse_filter
from wienerlab.enumeration import EnumFilter
from wienerlab.families import build, path
from wienerlab.io import read_graphs, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out.strip() else None
    return code, doc, out.err


def test_compute_from_file(tmp_path, capsys):
    f = tmp_path / "p4.g6"
    f.write_text(to_graph6(path(4)) + "\n")
    code, doc, _ = run(capsys, "compute", "--index", "wiener", "--in", str(f))
    assert code == 0
    assert doc["results"][0]["value"] == 10
    assert doc["seed"] == 0 and doc["command"] == "compute"


@pytest.mark.parametrize("index,value", [("szeged", 16), ("schultz", 32), ("gutman", 32), ("eta", 8)])
def test_compute_indices(capsys, index, value):
    code, doc, _ = run(capsys, "compute", "--index", index, "--spec", "cycle:4")
    assert code == 0 and doc["results"][0]["value"] == value


def test_compute_over_enumeration(capsys):
    code, doc, _ = run(capsys, "compute", "--trees", "5")
    assert code == 0
    assert sorted(r["value"] for r in doc["results"]) == [16, 18, 20]


def test_family_roundtrip(tmp_path, capsys):
    out = tmp_path / "x.g6"
    code, doc, _ = run(capsys, "family", "--spec", "H:3,2,4", "--out", str(out))
    assert code == 0 and doc["n"] == 13
    code, doc, _ = run(capsys, "compute", "--in", str(out))
    assert doc["results"][0]["value"] == wiener(build("H:3,2,4")) == wiener(read_graphs(out)[0])


def test_enumerate_with_filter(tmp_path, capsys):
    out = tmp_path / "cubic.g6"
    code, doc, _ = run(capsys, "enumerate", "--order", "6", "--filter", "regular=3", "--out", str(out))
    assert code == 0 and doc["count"] == 2 and len(read_graphs(out)) == 2
    code, doc, _ = run(capsys, "enumerate", "--trees", "8", "--limit", "3")
    assert doc["count"] == doc["oracle_count"] == 23 and len(doc["graph6"]) == 3


def test_verify_buckley_trees(capsys):
    code, doc, _ = run(capsys, "verify", "--check", "buckley", "--trees", "10")
    assert code == 0 and doc["verdict"] == "PASS" and doc["instances"] == 106


def test_verify_failure_exit_code(capsys):
    code, doc, _ = run(capsys, "verify", "--check", "ratio_values")
    assert code == 1 and doc["verdict"] == "FAIL" and doc["witness"]


def test_verify_seeded_is_reproducible(capsys):
    _, a, _ = run(capsys, "verify", "--check", "composite_mod_r", "--limit", "20", "--seed", "4", "--json")
    _, b, _ = run(capsys, "verify", "--check", "composite_mod_r", "--limit", "20", "--seed", "4", "--json")
    assert a == b and a["seed"] == 4 and a["verdict"] == "PASS"


def test_inverse(capsys):
    code, doc, _ = run(capsys, "inverse", "--w", "2")
    assert code == 0 and doc["status"] == "NOT_REPRESENTABLE"
    code, doc, _ = run(capsys, "inverse", "--w", "1000")
    assert doc["status"] == "FOUND"


def test_orient(capsys):
    code, doc, _ = run(capsys, "orient", "--spec", "path:3")
    assert code == 0 and doc["results"][0]["W_max"] == 4


def test_spectrum(capsys):
    code, doc, _ = run(capsys, "spectrum", "--trees", "5")
    assert doc["values"] == [16, 18, 20]


def test_conjecture(tmp_path, capsys):
    ck = tmp_path / "ck.jsonl"
    code, doc, _ = run(capsys, "conjecture", "--id", "cubic_max", "--n", "10", "--checkpoint", str(ck))
    assert code == 0 and doc["verdict"] == "SUPPORTED"
    assert ck.read_text().count("\n") == 1
    code, doc, _ = run(capsys, "conjecture", "--id", "bipartition_tree", "--params", '{"n_max": 6}')
    assert code == 0


def test_out_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    run(capsys, "inverse", "--w", "10", "--out", str(out))
    assert json.loads(out.read_text())["status"] == "FOUND"


def test_output_is_byte_identical(capsys):
    main(["verify", "--check", "kproportional", "--limit", "10", "--seed", "9"])
    a = capsys.readouterr().out
    main(["verify", "--check", "kproportional", "--limit", "10", "--seed", "9"])
    assert capsys.readouterr().out == a


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["compute"],
        ["verify", "--check", "nope"],
        ["compute", "--spec", "nope:1"],
        ["conjecture", "--id", "cubic_max", "--params", "{bad"],
        ["enumerate", "--order", "12"],
        ["compute", "--in", "/nonexistent/file.g6"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("wienerlab:")


def test_parse_filter():
    assert parse_filter("m=7,regular=3,bipartite,bipartition=3:2") == EnumFilter(
        m=7, regular=3, bipartite=True, bipartition=(3, 2)
    )
    with pytest.raises(UsageError):
        parse_filter("colour=3")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "wienerlab", "compute", "--spec", "star:5", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["results"][0]["value"] == 16
