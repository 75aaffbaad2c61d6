"""Smoke tests for the Python bindings and the command-line tool.

The build exports the extension location via PYTHONPATH and the CLI
binary via the SETLAB_CLI environment variable.
"""

import json
import os
import subprocess

import pytest

import setlab


def test_min_hitting_chained_pairs():
    r = setlab.min_hitting(4, [[0, 1], [1, 2], [2, 3]])
    assert r["found"] is True
    assert r["n0"] == 2
    assert r["k0"] == 0
    assert r["F"] == [[0, 2], [1, 2], [1, 3]]
    assert r["f"] == [0, 1, 2, 3]


def test_min_hitting_respects_miss_cap():
    r = setlab.min_hitting(3, [[0], [1], [2]], k_cap=1)
    assert r["found"] is True
    assert r["n0"] == 2
    assert r["k0"] == 1


def test_orbit_free_singleton():
    assert setlab.orbit(3, [[0, 1, 2]], [], [0]) == [[0], [1], [2]]


def test_orbit_pinned_is_fixed():
    assert setlab.orbit(3, [[0, 1, 2]], [0, 1, 2], [0, 2]) == [[0, 2]]


def test_invariant_subsets_two_blocks():
    got = setlab.invariant_subsets(5, [[0, 1], [2, 3, 4]], [])
    assert got == [[], [0, 1], [2, 3, 4], [0, 1, 2, 3, 4]]


def test_run_space_report_shape():
    rep = setlab.run({"command": "space", "m": 3, "s": 1})
    assert rep["pass"] is True
    assert rep["config"]["command"] == "space"
    anchors = [c["anchor"] for c in rep["checks"]]
    assert "space.basics_clopen" in anchors
    assert "battery.base_hausdorff" in anchors


def test_run_is_deterministic():
    cfg = {"command": "battery-sweep", "seed": 5, "count": 10}
    a = setlab.run(cfg)
    b = setlab.run(cfg)
    assert a == b
    assert a["pass"] is True


def test_run_rejects_unknown_command():
    with pytest.raises(ValueError):
        setlab.run({"command": "frobnicate"})


def _cli():
    path = os.environ.get("SETLAB_CLI")
    if not path:
        pytest.skip("SETLAB_CLI not set")
    return path


def test_cli_matches_python_report(tmp_path):
    cfg = {"command": "hitting", "m": 4, "members": [[0, 1], [1, 2], [2, 3]]}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    proc = subprocess.run(
        [_cli(), "--config", str(cfg_path)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == setlab.run(cfg)


def test_cli_usage_error_exit_code():
    proc = subprocess.run(
        [_cli(), "--command", "frobnicate"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 2
