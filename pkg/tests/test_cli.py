"""Command-line interface: output values, determinism, and exit codes."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from gaugediam import canonicalize, same_set
from gaugediam.families import equilateral_t
from gaugediam.geometry import polygon_to_json
from gaugediam.radii import make_context
from gaugediam.symmetry import Mode


def run_cli(args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "gaugediam.cli"] + args,
        capture_output=True, text=True, env=env)


@pytest.fixture(scope="module")
def triangle_json(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "T.json"
    path.write_text(json.dumps(polygon_to_json(equilateral_t())))
    return str(path)


@pytest.fixture(scope="module")
def neg_triangle_json(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "negT.json"
    path.write_text(json.dumps(
        {"vertices": (-equilateral_t().v).tolist()}))
    return str(path)


def test_compute_neg_triangle_max(triangle_json, neg_triangle_json):
    res = run_cli(["compute", "--body", neg_triangle_json,
                   "--gauge", triangle_json, "--mode", "max"])
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert out["s"] == pytest.approx(2.0, abs=1e-7)
    assert out["r"] == pytest.approx(0.5, abs=1e-7)
    assert out["R"] == pytest.approx(2.0, abs=1e-7)
    assert out["D_max"] == pytest.approx(2.0, abs=1e-7)
    assert out["y"] == pytest.approx(0.5, abs=1e-7)
    assert out["x"] == pytest.approx(0.25, abs=1e-7)
    assert len(out["diametral_pair"]) == 2


def test_compute_all_modes_ordering(triangle_json, neg_triangle_json):
    res = run_cli(["compute", "--body", neg_triangle_json,
                   "--gauge", triangle_json, "--mode", "all"])
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert out["D_max"] <= out["D_am"] <= out["D_hm"] <= out["D_min"] + 1e-9
    assert set(out["diametral_pair"]) == {"min", "hm", "am", "max"}
    assert out["applied_translation"] == [0.0, 0.0]


def test_symmetrize_output_is_canonical(triangle_json, tmp_path):
    out_path = str(tmp_path / "sym.json")
    res = run_cli(["symmetrize", "--gauge", triangle_json, "--mode", "max",
                   "-o", out_path])
    assert res.returncode == 0, res.stderr
    obj = json.loads(open(out_path).read())
    P = canonicalize(obj["vertices"])
    assert np.array_equal(P.v, np.asarray(obj["vertices"]))
    ctx = make_context(equilateral_t())
    assert same_set(P, ctx.sym[Mode.MAX], 1e-9)


def test_complete_triangle_hm_gives_hexagon(triangle_json, tmp_path):
    out_path = str(tmp_path / "comp.json")
    res = run_cli(["complete", "--body", triangle_json,
                   "--gauge", triangle_json, "--mode", "hm", "-o", out_path])
    assert res.returncode == 0, res.stderr
    P = canonicalize(json.loads(open(out_path).read())["vertices"])
    ctx = make_context(equilateral_t())
    assert same_set(P, ctx.sym[Mode.MAX], 1e-7)


def test_family_pair_output():
    res = run_cli(["family", "--name", "MIN_EQUALITY_PAIR", "--param", "1.5"])
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert "body" in out and "gauge" in out


def test_diagram_csv_deterministic(triangle_json, tmp_path):
    paths = [str(tmp_path / name) for name in ("d1.csv", "d2.csv")]
    for path in paths:
        res = run_cli(["diagram", "--gauge", triangle_json, "--mode", "max",
                       "--samples", "10", "--seed", "4", "-o", path,
                       "--svg", path + ".svg"])
        assert res.returncode == 0, res.stderr
    data = [open(p, "rb").read() for p in paths]
    assert data[0] == data[1]
    svgs = [open(p + ".svg", "rb").read() for p in paths]
    assert svgs[0] == svgs[1]
    header = data[0].decode().split("\n")[0]
    assert header == "body_id,family,mode,r,R,D,w,x,y"


def test_verify_ok(triangle_json):
    res = run_cli(["verify", "--gauge", triangle_json, "--mode", "all",
                   "--samples", "8", "--seed", "2"])
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert out == {"checked": 32, "violations": 0}


def test_verify_reports_counterexample_for_uncentered_gauge(tmp_path):
    # the centered-gauge inequalities genuinely fail for an off-center
    # triangle kept as given, exercising the failure path deterministically
    shifted = tmp_path / "shifted.json"
    shifted.write_text(json.dumps(
        {"vertices": (equilateral_t().v + np.array([0.25, 0.1])).tolist()}))
    res = run_cli(["verify", "--gauge", str(shifted), "--mode", "all",
                   "--samples", "8", "--seed", "2", "--no-center"])
    assert res.returncode == 1, res.stderr
    out = json.loads(res.stdout)
    assert "violation" in out and "counterexample" in out
    assert out["violation"]["margin"] < 0.0
    assert canonicalize(out["counterexample"]["vertices"]).is_fulldim


def test_exit_code_parse_errors(tmp_path, triangle_json):
    res = run_cli(["compute", "--body", str(tmp_path / "missing.json"),
                   "--gauge", triangle_json, "--mode", "max"])
    assert res.returncode == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    res = run_cli(["compute", "--body", str(bad),
                   "--gauge", triangle_json, "--mode", "max"])
    assert res.returncode == 2
    nokey = tmp_path / "nokey.json"
    nokey.write_text(json.dumps({"points": [[0, 0]]}))
    res = run_cli(["compute", "--body", str(nokey),
                   "--gauge", triangle_json, "--mode", "max"])
    assert res.returncode == 2


def test_exit_code_degenerate_gauge(tmp_path, triangle_json):
    seg = tmp_path / "segment.json"
    seg.write_text(json.dumps({"vertices": [[0, 0], [1, 0]]}))
    res = run_cli(["compute", "--body", triangle_json,
                   "--gauge", str(seg), "--mode", "max"])
    assert res.returncode == 3


def test_exit_code_bad_parameter():
    res = run_cli(["family", "--name", "t_alpha", "--param", "0.1"])
    assert res.returncode == 4


def test_version_runs():
    res = run_cli(["--version"])
    assert res.returncode == 0
    assert res.stdout.strip()
