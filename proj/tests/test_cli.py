import json
import os
import subprocess

import pytest

CLI = os.environ.get("TOPQ_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="TOPQ_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def report(*args):
    p = run("--json", *args)
    return p.returncode, json.loads(p.stdout)


def test_homology_json():
    code, r = report("homology", "torus")
    assert code == 0
    assert r["command"] == "homology"
    assert r["exit_code"] == 0
    assert r["results"]["betti"] == [1, 2, 1]
    assert "timing" not in r


def test_timing_only_on_request():
    _, r = report("--timing", "homology", "point")
    assert "timing" in r


def test_non_orientable_is_exit_2():
    p = run("duality", "rp2")
    assert p.returncode == 2
    code, r = report("duality", "rp2")
    assert code == 2
    assert r["error"]["kind"] == "NonOrientable"


def test_bad_file_is_exit_1(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert run("homology", str(bad)).returncode == 1
    assert run("homology", "no-such-complex").returncode == 1


def test_coincidence_wrap_pair():
    code, r = report("coincidence", "wrap2", "wrap1", "--witness")
    assert code == 0
    res = r["results"]
    assert res["lambda"] == "-1/1"
    assert res["consistent"] is True
    assert res["witness"]["status"] == "found"


def test_verify_seed_is_deterministic():
    a = run("--json", "verify", "products", "--seed", "7")
    b = run("--json", "verify", "products", "--seed", "7")
    assert a.returncode == 0
    ra, rb = json.loads(a.stdout)["results"], json.loads(b.stdout)["results"]
    assert ra["seed"] == 7 and ra["pass"] is True
    assert ra["suites"] == rb["suites"]
